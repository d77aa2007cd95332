#pragma once

#include <string>
#include <string_view>

#include <asdl/ast.hpp>

namespace asdl {

/// Parses one module. Exactly one `module N { ... }` per input; throws
/// ParseError (or IllegalCharacterError) on malformed text.
RawSpec parse_spec(std::string_view text);

/// Canonical layout: one constructor per line with `|` aligned under `=`,
/// blank lines between definitions. parse_spec(pretty_print(s)) is
/// structurally equal to s.
std::string pretty_print(const RawSpec& spec);

}  // namespace asdl
