#pragma once

#include <string>
#include <variant>
#include <vector>

#include <asdl/diag.hpp>

namespace asdl {

/// One field of a constructor, attribute list, or product: a type name, an
/// optional `*` sequence qualifier, and an optional field name.
struct RawField {
    std::string type_name;
    bool sequence = false;
    std::string name;  // empty when the field is unnamed
    SourceSpan span;
};

struct RawConstructor {
    std::string name;  // always capitalized
    std::vector<RawField> fields;
    SourceSpan span;
};

struct SumBody {
    std::vector<RawConstructor> constructors;  // at least one
    std::vector<RawField> attributes;
};

struct ProductBody {
    std::vector<RawField> fields;  // at least one
    /// Products cannot carry attributes; the parser stores them so check()
    /// can reject with a proper diagnostic.
    std::vector<RawField> attributes;
};

struct RawTypeDef {
    std::string name;
    std::variant<SumBody, ProductBody> body;
    SourceSpan span;

    bool is_sum() const { return std::holds_alternative<SumBody>(body); }
    const SumBody& sum() const { return std::get<SumBody>(body); }
    const ProductBody& product() const { return std::get<ProductBody>(body); }
};

/// A parsed module, before name resolution. Definition, constructor, and
/// field order match the source text exactly.
struct RawSpec {
    std::string module_name;
    std::vector<RawTypeDef> definitions;
    SourceSpan span;
};

/// Deep equality that ignores source spans.
bool structurally_equal(const RawField& a, const RawField& b);
bool structurally_equal(const RawConstructor& a, const RawConstructor& b);
bool structurally_equal(const RawTypeDef& a, const RawTypeDef& b);
bool structurally_equal(const RawSpec& a, const RawSpec& b);

}  // namespace asdl
