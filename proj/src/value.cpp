#include <asdl/value.hpp>

namespace asdl {

struct Value::Rep {
    struct IntV {
        Int value;
    };
    struct StrV {
        std::string value;
    };
    struct IdV {
        Atom value;
    };
    struct ListV {
        ValueList elements;
    };
    struct ProductV {
        std::string type;
        ValueList fields;
    };
    struct SumV {
        std::string type;
        std::string ctor;
        ValueList attributes;
        ValueList fields;
    };

    std::variant<IntV, StrV, IdV, ListV, ProductV, SumV> v;
};

namespace {

[[noreturn]] void wrong_kind(const char* what) {
    throw std::logic_error(std::string("value is not ") + what);
}

}  // namespace

Value Value::integer(Int v) {
    return Value(std::make_shared<const Rep>(Rep{Rep::IntV{std::move(v)}}));
}

Value Value::string(std::string v) {
    return Value(std::make_shared<const Rep>(Rep{Rep::StrV{std::move(v)}}));
}

Value Value::identifier(Atom a) {
    return Value(std::make_shared<const Rep>(Rep{Rep::IdV{a}}));
}

Value Value::list(ValueList elements) {
    return Value(
        std::make_shared<const Rep>(Rep{Rep::ListV{std::move(elements)}}));
}

Value Value::product(std::string type_name, ValueList fields) {
    return Value(std::make_shared<const Rep>(
        Rep{Rep::ProductV{std::move(type_name), std::move(fields)}}));
}

Value Value::sum(std::string type_name, std::string ctor_name,
                 ValueList attributes, ValueList fields) {
    return Value(std::make_shared<const Rep>(
        Rep{Rep::SumV{std::move(type_name), std::move(ctor_name),
                      std::move(attributes), std::move(fields)}}));
}

Value::Kind Value::kind() const {
    return static_cast<Kind>(rep_->v.index());
}

const Int& Value::as_int() const {
    if (auto* p = std::get_if<Rep::IntV>(&rep_->v)) return p->value;
    wrong_kind("an integer");
}

const std::string& Value::as_string() const {
    if (auto* p = std::get_if<Rep::StrV>(&rep_->v)) return p->value;
    wrong_kind("a string");
}

Atom Value::as_identifier() const {
    if (auto* p = std::get_if<Rep::IdV>(&rep_->v)) return p->value;
    wrong_kind("an identifier");
}

const ValueList& Value::elements() const {
    if (auto* p = std::get_if<Rep::ListV>(&rep_->v)) return p->elements;
    wrong_kind("a list");
}

const std::string& Value::type_name() const {
    if (auto* p = std::get_if<Rep::ProductV>(&rep_->v)) return p->type;
    if (auto* p = std::get_if<Rep::SumV>(&rep_->v)) return p->type;
    wrong_kind("a product or sum");
}

const ValueList& Value::fields() const {
    if (auto* p = std::get_if<Rep::ProductV>(&rep_->v)) return p->fields;
    if (auto* p = std::get_if<Rep::SumV>(&rep_->v)) return p->fields;
    wrong_kind("a product or sum");
}

const std::string& Value::constructor() const {
    if (auto* p = std::get_if<Rep::SumV>(&rep_->v)) return p->ctor;
    wrong_kind("a sum");
}

const ValueList& Value::attributes() const {
    if (auto* p = std::get_if<Rep::SumV>(&rep_->v)) return p->attributes;
    wrong_kind("a sum");
}

namespace {

bool all_equal(const ValueList& a, const ValueList& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace

bool equal(const Value& a, const Value& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Value::Kind::Int:
        return a.as_int() == b.as_int();
    case Value::Kind::String:
        return a.as_string() == b.as_string();
    case Value::Kind::Identifier:
        return a.as_identifier() == b.as_identifier();
    case Value::Kind::List:
        return all_equal(a.elements(), b.elements());
    case Value::Kind::Product:
        return a.type_name() == b.type_name() && all_equal(a.fields(), b.fields());
    case Value::Kind::Sum:
        return a.type_name() == b.type_name() &&
               a.constructor() == b.constructor() &&
               all_equal(a.attributes(), b.attributes()) &&
               all_equal(a.fields(), b.fields());
    }
    return false;
}

namespace {

const char* kind_name(Value::Kind k) {
    switch (k) {
    case Value::Kind::Int: return "integer";
    case Value::Kind::String: return "string";
    case Value::Kind::Identifier: return "identifier";
    case Value::Kind::List: return "list";
    case Value::Kind::Product: return "product";
    case Value::Kind::Sum: return "sum";
    }
    return "?";
}

class Validator {
public:
    explicit Validator(const SchemaEnv& env) : env_(env) {}

    std::vector<Violation> run(std::string_view type_name, const Value& v) {
        path_ = std::string(type_name);
        check_type(type_name, v);
        return std::move(violations_);
    }

private:
    void add(const std::string& reason) {
        violations_.push_back({path_, reason});
    }

    void check_field_values(const std::vector<FieldDef>& defs,
                            const ValueList& values, const char* what) {
        if (defs.size() != values.size()) {
            std::string reason = std::string("expected ") +
                                 std::to_string(defs.size()) + " " + what +
                                 "(s), got " + std::to_string(values.size());
            if (values.size() < defs.size()) {
                reason += "; missing '" + defs[values.size()].name + "'";
            }
            add(reason);
            return;
        }
        for (std::size_t i = 0; i < defs.size(); ++i) {
            std::size_t mark = path_.size();
            path_ += '/';
            path_ += defs[i].name;
            check_field(defs[i], values[i]);
            path_.resize(mark);
        }
    }

    void check_field(const FieldDef& def, const Value& v) {
        if (!def.sequence) {
            check_type(def.type_name, v);
            return;
        }
        if (v.kind() != Value::Kind::List) {
            add(std::string("expected a list of '") + def.type_name +
                "', got " + kind_name(v.kind()));
            return;
        }
        for (std::size_t i = 0; i < v.elements().size(); ++i) {
            std::size_t mark = path_.size();
            path_ += '[' + std::to_string(i) + ']';
            check_type(def.type_name, v.elements()[i]);
            path_.resize(mark);
        }
    }

    void check_type(std::string_view type_name, const Value& v) {
        if (type_name == "int") {
            if (v.kind() != Value::Kind::Int) {
                add("expected an integer, got " + std::string(kind_name(v.kind())));
            }
            return;
        }
        if (type_name == "string") {
            if (v.kind() != Value::Kind::String) {
                add("expected a string, got " + std::string(kind_name(v.kind())));
            }
            return;
        }
        if (type_name == "identifier") {
            if (v.kind() != Value::Kind::Identifier) {
                add("expected an identifier, got " +
                    std::string(kind_name(v.kind())));
            }
            return;
        }
        const CheckedType* t = env_.find_type(type_name);
        if (!t) {
            add("unknown type '" + std::string(type_name) + "'");
            return;
        }
        if (t->kind == TypeKind::Product) {
            if (v.kind() != Value::Kind::Product || v.type_name() != t->name) {
                add("expected a '" + t->name + "' product, got " +
                    describe(v));
                return;
            }
            check_field_values(t->fields, v.fields(), "field");
            return;
        }
        if (v.kind() != Value::Kind::Sum || v.type_name() != t->name) {
            add("expected a '" + t->name + "' sum, got " + describe(v));
            return;
        }
        const ConstructorDef* ctor = nullptr;
        for (const ConstructorDef& c : t->constructors) {
            if (c.name == v.constructor()) ctor = &c;
        }
        if (!ctor) {
            add("'" + t->name + "' has no constructor '" + v.constructor() +
                "'");
            return;
        }
        std::size_t mark = path_.size();
        path_ += '/';
        path_ += ctor->name;
        check_field_values(t->attributes, v.attributes(), "attribute");
        check_field_values(ctor->fields, v.fields(), "field");
        path_.resize(mark);
    }

    std::string describe(const Value& v) {
        std::string out = kind_name(v.kind());
        if (v.kind() == Value::Kind::Product || v.kind() == Value::Kind::Sum) {
            out += " '" + v.type_name() + "'";
        }
        return out;
    }

    const SchemaEnv& env_;
    std::string path_;
    std::vector<Violation> violations_;
};

}  // namespace

std::vector<Violation> validate(const SchemaEnv& env,
                                std::string_view type_name, const Value& v) {
    return Validator(env).run(type_name, v);
}

ConformanceError::ConformanceError(std::vector<Violation> violations)
    : std::runtime_error(violations.empty()
                             ? "value does not conform"
                             : violations.front().path + ": " +
                                   violations.front().reason),
      violations_(std::move(violations)) {}

Value mk_sum(const SchemaEnv& env, std::string_view type_name,
             std::string_view ctor_name, ValueList attributes,
             ValueList fields) {
    Value v = Value::sum(std::string(type_name), std::string(ctor_name),
                         std::move(attributes), std::move(fields));
    auto violations = validate(env, type_name, v);
    if (!violations.empty()) throw ConformanceError(std::move(violations));
    return v;
}

Value mk_product(const SchemaEnv& env, std::string_view type_name,
                 ValueList fields) {
    Value v = Value::product(std::string(type_name), std::move(fields));
    auto violations = validate(env, type_name, v);
    if (!violations.empty()) throw ConformanceError(std::move(violations));
    return v;
}

}  // namespace asdl
