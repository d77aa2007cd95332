#pragma once

#include <unordered_map>
#include <vector>

#include <asdl/value.hpp>
#include <minircc/objects.hpp>

namespace minircc {

/// Assigns dense uids to multiply-referenced front-end objects and encodes
/// each one as an item exactly once. Identity, not content, keys the table:
/// two distinct objects with equal contents get two uids.
class UidTable {
public:
    explicit UidTable(const asdl::SchemaEnv& rcc);

    /// Idempotent per object. The first call assigns the next uid and
    /// appends an item carrying the object's encoding; items land in
    /// completion order, so mutually referential types resolve by uid.
    int intern_type(const TypeRef& type);
    int intern_symbol(const SymbolRef& symbol);

    int count() const { return next_ - 1; }  // uids assigned so far
    const std::vector<asdl::Value>& items() const { return items_; }

    /// The rcc `symbol` product for a symbol, interning its type.
    asdl::Value symbol_value(const Symbol& symbol);

private:
    asdl::Value type_value(const Type& type);

    const asdl::SchemaEnv& env_;
    std::unordered_map<const void*, int> uids_;
    int next_ = 1;
    std::vector<asdl::Value> items_;
};

}  // namespace minircc
