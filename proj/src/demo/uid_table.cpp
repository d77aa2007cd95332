#include <minircc/uid_table.hpp>

namespace minircc {

using asdl::Value;
using asdl::ValueList;

UidTable::UidTable(const asdl::SchemaEnv& rcc) : env_(rcc) {}

int UidTable::intern_type(const TypeRef& type) {
    auto it = uids_.find(type.get());
    if (it != uids_.end()) return it->second;
    int uid = next_++;
    uids_.emplace(type.get(), uid);
    // Encode after reserving the uid; recursive references (a struct whose
    // fields point back at it) pick up the reserved number.
    Value encoded = type_value(*type);
    items_.push_back(asdl::mk_sum(env_, "item", "Type",
                                  {Value::integer(uid)}, {encoded}));
    return uid;
}

int UidTable::intern_symbol(const SymbolRef& symbol) {
    auto it = uids_.find(symbol.get());
    if (it != uids_.end()) return it->second;
    int uid = next_++;
    uids_.emplace(symbol.get(), uid);
    Value encoded = symbol_value(*symbol);
    items_.push_back(asdl::mk_sum(env_, "item", "Symbol",
                                  {Value::integer(uid)}, {encoded}));
    return uid;
}

Value UidTable::symbol_value(const Symbol& symbol) {
    int type_uid = intern_type(symbol.type);
    return asdl::mk_product(
        env_, "symbol",
        {Value::identifier(symbol.id), Value::integer(type_uid),
         Value::integer(static_cast<int>(symbol.scope)),
         Value::integer(static_cast<int>(symbol.sclass)),
         Value::integer(symbol.ref), Value::integer(symbol.flags)});
}

Value UidTable::type_value(const Type& type) {
    ValueList attrs = {Value::integer(type.size), Value::integer(type.align)};
    auto sum = [&](const char* ctor, ValueList fields) {
        return asdl::mk_sum(env_, "type", ctor, attrs, std::move(fields));
    };
    switch (type.op) {
    case TypeOp::Int:
        return sum("INT", {});
    case TypeOp::Unsigned:
        return sum("UNSIGNED", {});
    case TypeOp::Float:
        return sum("FLOAT", {});
    case TypeOp::Void:
        return sum("VOID", {});
    case TypeOp::Pointer:
        return sum("POINTER", {Value::integer(intern_type(type.ref))});
    case TypeOp::Enum: {
        ValueList ids;
        for (const EnumId& id : type.ids) {
            ids.push_back(asdl::mk_product(env_, "enum",
                                           {Value::identifier(id.name),
                                            Value::integer(id.value)}));
        }
        return sum("ENUM", {Value::identifier(type.tag),
                            Value::list(std::move(ids))});
    }
    case TypeOp::Struct:
    case TypeOp::Union: {
        ValueList fields;
        for (const StructField& f : type.fields) {
            fields.push_back(asdl::mk_product(
                env_, "field",
                {Value::identifier(f.name),
                 Value::integer(intern_type(f.type)), Value::integer(f.offset),
                 Value::integer(f.bitsize), Value::integer(f.lsb)}));
        }
        return sum(type.op == TypeOp::Struct ? "STRUCT" : "UNION",
                   {Value::identifier(type.tag),
                    Value::list(std::move(fields))});
    }
    case TypeOp::Array:
        return sum("ARRAY", {Value::integer(intern_type(type.ref))});
    case TypeOp::Function: {
        ValueList formals;
        for (const TypeRef& formal : type.formals) {
            formals.push_back(Value::integer(intern_type(formal)));
        }
        return sum("FUNCTION", {Value::integer(intern_type(type.ref)),
                                Value::list(std::move(formals))});
    }
    case TypeOp::Const:
        return sum("CONST", {Value::integer(intern_type(type.ref))});
    case TypeOp::Volatile:
        return sum("VOLATILE", {Value::integer(intern_type(type.ref))});
    }
    throw std::logic_error("unhandled type op");
}

}  // namespace minircc
