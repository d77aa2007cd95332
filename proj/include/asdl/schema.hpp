#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <asdl/ast.hpp>

namespace asdl {

/// int, string, and identifier are built in; everything else must resolve
/// to a definition in the module.
bool is_builtin_type(std::string_view name);

struct FieldDef {
    std::string type_name;
    bool sequence = false;
    std::string declared_name;  // empty when the source omitted it
    std::string name;           // effective name, always set after check
    SourceSpan span;
};

struct ConstructorDef {
    std::string name;
    unsigned tag = 0;  // 1-based declaration index
    std::vector<FieldDef> fields;  // the constructor's own fields
    /// Attributes followed by own fields, in wire order.
    std::vector<FieldDef> effective_fields;
    SourceSpan span;
};

enum class TypeKind { Sum, Product };

struct CheckedType {
    std::string name;
    TypeKind kind = TypeKind::Sum;
    /// True iff every constructor is nullary and there are no attributes.
    bool enum_like = false;
    std::vector<ConstructorDef> constructors;  // sums only
    std::vector<FieldDef> attributes;          // sums only
    std::vector<FieldDef> fields;              // products only
    SourceSpan span;
};

/// Resolved, checked schema. Immutable after check(); safe to share across
/// threads for reading.
class SchemaEnv {
public:
    const std::string& module_name() const { return module_; }
    const std::vector<CheckedType>& types() const { return types_; }

    const CheckedType* find_type(std::string_view name) const;
    /// Throws CheckError(UnknownType) when absent.
    const CheckedType& type(std::string_view name) const;

    /// Throws CheckError(UnknownConstructor) when absent.
    const ConstructorDef& constructor(std::string_view type_name,
                                      std::string_view ctor_name) const;

    /// 1-based declaration index of a constructor, stable across runs.
    unsigned tag_of(std::string_view type_name,
                    std::string_view ctor_name) const;

private:
    friend SchemaEnv check(const RawSpec& spec);

    std::string module_;
    std::vector<CheckedType> types_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Resolves type references, assigns tags, computes effective field names
/// and enum classification. Throws CheckError on the first violation.
SchemaEnv check(const RawSpec& spec);

/// Names of a constructor's effective fields (attributes first).
std::vector<std::string> effective_field_names(const ConstructorDef& ctor);

}  // namespace asdl
