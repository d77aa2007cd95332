#include <asdl/schema.hpp>

#include <map>
#include <set>

namespace asdl {

bool is_builtin_type(std::string_view name) {
    return name == "int" || name == "string" || name == "identifier";
}

const CheckedType* SchemaEnv::find_type(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &types_[it->second];
}

const CheckedType& SchemaEnv::type(std::string_view name) const {
    const CheckedType* t = find_type(name);
    if (!t) {
        throw CheckError(CheckErrc::UnknownType, std::string(name), {},
                         "unknown type '" + std::string(name) + "'");
    }
    return *t;
}

const ConstructorDef& SchemaEnv::constructor(std::string_view type_name,
                                             std::string_view ctor_name) const {
    const CheckedType& t = type(type_name);
    for (const ConstructorDef& c : t.constructors) {
        if (c.name == ctor_name) return c;
    }
    throw CheckError(CheckErrc::UnknownConstructor, std::string(ctor_name), {},
                     "type '" + std::string(type_name) +
                         "' has no constructor '" + std::string(ctor_name) +
                         "'");
}

unsigned SchemaEnv::tag_of(std::string_view type_name,
                           std::string_view ctor_name) const {
    return constructor(type_name, ctor_name).tag;
}

std::vector<std::string> effective_field_names(const ConstructorDef& ctor) {
    std::vector<std::string> names;
    names.reserve(ctor.effective_fields.size());
    for (const FieldDef& f : ctor.effective_fields) names.push_back(f.name);
    return names;
}

namespace {

FieldDef to_field_def(const RawField& raw) {
    FieldDef f;
    f.type_name = raw.type_name;
    f.sequence = raw.sequence;
    f.declared_name = raw.name;
    f.name = raw.name;
    f.span = raw.span;
    return f;
}

/// Unnamed fields of type T become T1, T2, ... counted per base name within
/// one constructor; list fields count separately as T_list1, T_list2, ...
void assign_effective_names(std::vector<FieldDef>& fields) {
    std::map<std::string, int> counters;
    for (FieldDef& f : fields) {
        if (!f.declared_name.empty()) continue;
        std::string base = f.type_name;
        if (f.sequence) base += "_list";
        f.name = base + std::to_string(++counters[base]);
    }
}

void check_field_names_unique(const std::vector<FieldDef>& fields,
                              const std::string& where) {
    std::set<std::string> seen;
    for (const FieldDef& f : fields) {
        if (!seen.insert(f.name).second) {
            throw CheckError(CheckErrc::DuplicateFieldName, f.name, f.span,
                             "duplicate field name '" + f.name + "' in " +
                                 where);
        }
    }
}

void check_field_types(const SchemaEnv& env, const std::vector<FieldDef>& fields) {
    for (const FieldDef& f : fields) {
        if (is_builtin_type(f.type_name)) continue;
        if (!env.find_type(f.type_name)) {
            throw CheckError(CheckErrc::UndefinedType, f.type_name, f.span,
                             "undefined type '" + f.type_name + "'");
        }
    }
}

}  // namespace

SchemaEnv check(const RawSpec& spec) {
    SchemaEnv env;
    env.module_ = spec.module_name;

    // Pass 1: register type names so recursive references resolve.
    for (const RawTypeDef& def : spec.definitions) {
        if (env.index_.count(def.name)) {
            throw CheckError(CheckErrc::DuplicateTypeDef, def.name, def.span,
                             "duplicate type definition '" + def.name + "'");
        }
        CheckedType t;
        t.name = def.name;
        t.kind = def.is_sum() ? TypeKind::Sum : TypeKind::Product;
        t.span = def.span;
        env.index_.emplace(def.name, env.types_.size());
        env.types_.push_back(std::move(t));
    }

    // Constructor names become module-prefixed globals, so they must be
    // unique across the whole module.
    std::set<std::string> ctor_names;

    for (std::size_t i = 0; i < spec.definitions.size(); ++i) {
        const RawTypeDef& def = spec.definitions[i];
        CheckedType& t = env.types_[i];
        if (!def.is_sum()) {
            if (!def.product().attributes.empty()) {
                throw CheckError(CheckErrc::AttributesOnProduct, def.name,
                                 def.product().attributes.front().span,
                                 "product type '" + def.name +
                                     "' cannot have attributes");
            }
            for (const RawField& raw : def.product().fields) {
                t.fields.push_back(to_field_def(raw));
            }
            assign_effective_names(t.fields);
            check_field_names_unique(t.fields, "product '" + def.name + "'");
            continue;
        }

        const SumBody& sum = def.sum();
        for (const RawField& raw : sum.attributes) {
            t.attributes.push_back(to_field_def(raw));
        }
        unsigned tag = 0;
        for (const RawConstructor& raw_ctor : sum.constructors) {
            if (!ctor_names.insert(raw_ctor.name).second) {
                throw CheckError(CheckErrc::DuplicateConstructor,
                                 raw_ctor.name, raw_ctor.span,
                                 "duplicate constructor '" + raw_ctor.name +
                                     "' (constructor names are unique "
                                     "module-wide)");
            }
            ConstructorDef ctor;
            ctor.name = raw_ctor.name;
            ctor.tag = ++tag;
            ctor.span = raw_ctor.span;
            for (const RawField& raw : raw_ctor.fields) {
                ctor.fields.push_back(to_field_def(raw));
            }
            // Attributes are factored into a common prefix of every
            // constructor; names are generated over the combined list.
            ctor.effective_fields = t.attributes;
            ctor.effective_fields.insert(ctor.effective_fields.end(),
                                         ctor.fields.begin(),
                                         ctor.fields.end());
            assign_effective_names(ctor.effective_fields);
            check_field_names_unique(ctor.effective_fields,
                                     "constructor '" + raw_ctor.name + "'");
            ctor.fields.assign(
                ctor.effective_fields.begin() + t.attributes.size(),
                ctor.effective_fields.end());
            t.constructors.push_back(std::move(ctor));
        }
        // The attribute prefix is identical in every constructor, so the
        // generated names from any of them apply to the type as a whole.
        if (!t.constructors.empty() && !t.attributes.empty()) {
            t.attributes.assign(
                t.constructors.front().effective_fields.begin(),
                t.constructors.front().effective_fields.begin() +
                    t.attributes.size());
        }
        t.enum_like = t.attributes.empty();
        for (const ConstructorDef& c : t.constructors) {
            if (!c.fields.empty()) t.enum_like = false;
        }
    }

    // Pass 2: resolve every field reference.
    for (const CheckedType& t : env.types_) {
        check_field_types(env, t.attributes);
        check_field_types(env, t.fields);
        for (const ConstructorDef& c : t.constructors) {
            check_field_types(env, c.fields);
        }
    }
    return env;
}

}  // namespace asdl
