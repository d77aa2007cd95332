#include <minircc/objects.hpp>

namespace minircc {

TypeRef make_basic(TypeOp op, int size, int align) {
    auto t = std::make_shared<Type>();
    t->op = op;
    t->size = size;
    t->align = align;
    return t;
}

TypeRef make_function(TypeRef return_type, std::vector<TypeRef> formals) {
    auto t = std::make_shared<Type>();
    t->op = TypeOp::Function;
    t->size = 0;
    t->align = 0;
    t->ref = std::move(return_type);
    t->formals = std::move(formals);
    return t;
}

TypeRef make_struct_shell(std::string tag) {
    auto t = std::make_shared<Type>();
    t->op = TypeOp::Struct;
    t->tag = std::move(tag);
    return t;
}

void set_struct_fields(Type& record, std::vector<StructField> fields) {
    std::vector<Metrics::Entry> entries;
    entries.reserve(fields.size());
    for (const StructField& f : fields) {
        entries.push_back({f.type->size, f.type->align});
    }
    RecordLayout layout = layout_record(entries);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        fields[i].offset = layout.offsets[i];
    }
    record.fields = std::move(fields);
    record.size = layout.size;
    record.align = layout.align;
}

TypeTable::TypeTable(const Metrics& m)
    : metrics_(m),
      int_(make_basic(TypeOp::Int, m.int_m.size, m.int_m.align)),
      char_(make_basic(TypeOp::Int, m.char_m.size, m.char_m.align)),
      void_(make_basic(TypeOp::Void, 0, 0)) {}

TypeRef TypeTable::pointer_to(const TypeRef& pointee) {
    auto it = pointers_.find(pointee.get());
    if (it != pointers_.end()) return it->second;
    auto t = make_basic(TypeOp::Pointer, metrics_.pointer_m.size,
                        metrics_.pointer_m.align);
    t->ref = pointee;
    pointers_.emplace(pointee.get(), t);
    return t;
}

}  // namespace minircc
