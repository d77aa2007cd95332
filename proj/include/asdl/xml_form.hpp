#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <asdl/value.hpp>

namespace asdl::xml {

class XmlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optional symbolic rendering of int-typed fields: a field name maps to a
/// code<->name table. The reader applies the inverse mapping, so round
/// trips are unaffected.
struct Symbols {
    std::map<std::string, std::map<std::int64_t, std::string>> by_field;

    const std::string* name_of(const std::string& field,
                               std::int64_t code) const;
    bool code_of(const std::string& field, std::string_view name,
                 std::int64_t& out) const;
};

// Mapping: every sum value is an element named by its constructor, every
// product an element named by its type. ASDL attributes of built-in type
// become XML attributes; fields become child elements named by their
// effective field names, with integers, strings, and identifiers as text
// content and list elements nested by their own kind.

std::string write_value(const SchemaEnv& env, std::string_view type_name,
                        const Value& v, const Symbols* symbols = nullptr);
Value read_value(const SchemaEnv& env, std::string_view type_name,
                 std::string_view text, const Symbols* symbols = nullptr);

/// Multiple instances are wrapped in a <pickle> root; a single instance is
/// written bare. The reader accepts both shapes.
std::string write_file(const SchemaEnv& env, std::string_view type_name,
                       std::span<const Value> instances,
                       const Symbols* symbols = nullptr);
std::vector<Value> read_file(const SchemaEnv& env, std::string_view type_name,
                             std::string_view text,
                             const Symbols* symbols = nullptr);

}  // namespace asdl::xml
