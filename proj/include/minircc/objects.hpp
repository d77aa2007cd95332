#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <minircc/metrics.hpp>

namespace minircc {

// Integer conventions for symbol fields. The wire carries the numbers;
// these tables give them names.
enum class Scope { Constants = 1, Labels = 2, Global = 3, Param = 4, Local = 5 };
enum class Sclass { Auto = 1, Register = 2, Static = 3, Extern = 4 };
enum class Seg { Code = 1, Bss = 2, Data = 3, Lit = 4 };

inline constexpr int kFlagAddressed = 1;
inline constexpr int kFlagTemporary = 2;
inline constexpr int kFlagGenerated = 4;

enum class TypeOp {
    Int, Unsigned, Float, Void, Pointer, Enum, Struct, Union,
    Array, Function, Const, Volatile,
};

struct Type;
using TypeRef = std::shared_ptr<Type>;

struct StructField {
    std::string name;
    TypeRef type;
    int offset = 0;
    int bitsize = 0;
    int lsb = 0;
};

struct EnumId {
    std::string name;
    int value = 0;
};

/// Front-end view of a C-like type. Multiply-referenced types are shared by
/// pointer; the uid table keys on that identity, not on contents.
struct Type {
    TypeOp op = TypeOp::Int;
    int size = 0;
    int align = 0;
    TypeRef ref;                      // pointee, element, referent, or return
    std::vector<TypeRef> formals;     // functions
    std::string tag;                  // struct/union/enum
    std::vector<StructField> fields;  // struct/union
    std::vector<EnumId> ids;          // enum
};

TypeRef make_basic(TypeOp op, int size, int align);
TypeRef make_function(TypeRef return_type, std::vector<TypeRef> formals);

/// Structs that point to themselves need a shell first: create it, build
/// pointers to it, then attach the fields.
TypeRef make_struct_shell(std::string tag);

/// Fills in fields and computes offsets, size, and alignment from the field
/// types' sizes and alignments.
void set_struct_fields(Type& record, std::vector<StructField> fields);

struct Symbol {
    std::string id;
    TypeRef type;
    Scope scope = Scope::Local;
    Sclass sclass = Sclass::Auto;
    int ref = 0;
    int flags = 0;
};
using SymbolRef = std::shared_ptr<Symbol>;

/// Basic types and cached derived types for one target. Repeated requests
/// return the same object, so uids stay stable.
class TypeTable {
public:
    explicit TypeTable(const Metrics& m);

    const Metrics& metrics() const { return metrics_; }
    const TypeRef& int_type() const { return int_; }
    const TypeRef& char_type() const { return char_; }
    const TypeRef& void_type() const { return void_; }
    TypeRef pointer_to(const TypeRef& pointee);

private:
    Metrics metrics_;
    TypeRef int_;
    TypeRef char_;
    TypeRef void_;
    std::map<const Type*, TypeRef> pointers_;
};

}  // namespace minircc
