#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <asdl/value.hpp>

namespace asdl::text {

// Human-readable prefix notation:
//   sums        (Ctor :attr value ... field ...)
//   products    (tuple v1 v2 ...)
//   lists       [v1 v2 ...]
//   integers    bare decimal
//   strings     double-quoted with \" \\ \n \t \r escapes
//   identifiers bare tokens, quoted when they contain delimiters
// Parsing is schema-directed, so bare tokens are unambiguous.

std::string print_value(const SchemaEnv& env, std::string_view type_name,
                        const Value& v);

/// Parses exactly one value; trailing input other than whitespace is an
/// error. Throws ParseError or ConformanceError.
Value parse_value(const SchemaEnv& env, std::string_view type_name,
                  std::string_view text);

/// Parses zero or more whitespace-separated values until end of input.
std::vector<Value> parse_values(const SchemaEnv& env,
                                std::string_view type_name,
                                std::string_view text);

}  // namespace asdl::text
