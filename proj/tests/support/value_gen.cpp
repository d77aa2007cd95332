#include "value_gen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace testsupport {

using asdl::CheckedType;
using asdl::ConstructorDef;
using asdl::FieldDef;
using asdl::SchemaEnv;
using asdl::TypeKind;
using asdl::Value;
using asdl::ValueList;

namespace {

constexpr int kInfinity = 1 << 20;

/// Levels needed to ground a value of each type: list fields can always be
/// empty, so only non-sequence fields force recursion.
std::map<std::string, int> ground_depths(const SchemaEnv& env) {
    std::map<std::string, int> need;
    for (const CheckedType& t : env.types()) need[t.name] = kInfinity;
    auto field_need = [&](const FieldDef& f) {
        if (f.sequence || asdl::is_builtin_type(f.type_name)) return 0;
        return need.at(f.type_name);
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const CheckedType& t : env.types()) {
            int candidate;
            if (t.kind == TypeKind::Product) {
                int worst = 0;
                for (const FieldDef& f : t.fields) {
                    worst = std::max(worst, field_need(f));
                }
                candidate = worst >= kInfinity ? kInfinity : worst + 1;
            } else {
                int best = kInfinity;
                for (const ConstructorDef& c : t.constructors) {
                    int worst = 0;
                    for (const FieldDef& f : c.effective_fields) {
                        worst = std::max(worst, field_need(f));
                    }
                    best = std::min(best, worst);
                }
                candidate = best >= kInfinity ? kInfinity : best + 1;
            }
            if (candidate < need.at(t.name)) {
                need[t.name] = candidate;
                changed = true;
            }
        }
    }
    return need;
}

class Generator {
public:
    Generator(const SchemaEnv& env, std::mt19937_64& rng,
              const GenOptions& opts)
        : env_(env), rng_(rng), opts_(opts), need_(ground_depths(env)) {}

    Value gen_type(std::string_view type, int budget) {
        if (type == "int") return gen_int();
        if (type == "string") return Value::string(gen_string());
        if (type == "identifier") return Value::identifier(gen_ident());
        const CheckedType& t = env_.type(type);
        if (need_.at(t.name) >= kInfinity) {
            throw std::logic_error("type '" + t.name +
                                   "' has no finite values");
        }
        if (t.kind == TypeKind::Product) {
            return Value::product(t.name, gen_fields(t.fields, budget - 1));
        }
        const ConstructorDef& ctor = pick_constructor(t, budget);
        ValueList attrs = gen_fields(t.attributes, budget - 1);
        ValueList fields = gen_fields(ctor.fields, budget - 1);
        return Value::sum(t.name, ctor.name, std::move(attrs),
                          std::move(fields));
    }

private:
    std::uint64_t roll(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
    }

    int ctor_cost(const ConstructorDef& c) {
        int worst = 0;
        for (const FieldDef& f : c.effective_fields) {
            if (f.sequence || asdl::is_builtin_type(f.type_name)) continue;
            worst = std::max(worst, need_.at(f.type_name));
        }
        return worst;
    }

    const ConstructorDef& pick_constructor(const CheckedType& t, int budget) {
        std::vector<const ConstructorDef*> eligible;
        for (const ConstructorDef& c : t.constructors) {
            if (ctor_cost(c) < budget) eligible.push_back(&c);
        }
        if (eligible.empty()) {
            // Budget exhausted: fall back to the cheapest constructors.
            int best = kInfinity;
            for (const ConstructorDef& c : t.constructors) {
                best = std::min(best, ctor_cost(c));
            }
            for (const ConstructorDef& c : t.constructors) {
                if (ctor_cost(c) == best) eligible.push_back(&c);
            }
        }
        return *eligible[roll(eligible.size())];
    }

    ValueList gen_fields(const std::vector<FieldDef>& defs, int budget) {
        ValueList out;
        out.reserve(defs.size());
        for (const FieldDef& f : defs) {
            if (!f.sequence) {
                out.push_back(gen_type(f.type_name, budget));
                continue;
            }
            bool grounded = asdl::is_builtin_type(f.type_name) ||
                            need_.at(f.type_name) < budget;
            std::size_t len = grounded ? roll(4) : 0;
            ValueList elems;
            for (std::size_t i = 0; i < len; ++i) {
                elems.push_back(gen_type(f.type_name, budget));
            }
            out.push_back(Value::list(std::move(elems)));
        }
        return out;
    }

    Value gen_int() {
        switch (roll(8)) {
        case 0: return Value::integer(0);
        case 1: return Value::integer(static_cast<long long>(roll(2)) - 1);
        case 2: return Value::integer(static_cast<long long>(roll(128)));
        case 3:
            return Value::integer(-static_cast<long long>(roll(128)));
        case 4:
        case 5:
            return Value::integer(static_cast<long long>(roll(1u << 30)));
        case 6:
            return Value::integer(-static_cast<long long>(roll(1u << 30)));
        default:
            return Value::integer(static_cast<long long>(
                roll(0x7FFFFFFFFFFFFFFFull)) - 0x3FFFFFFFFFFFFFFFll);
        }
    }

    std::string gen_string() {
        // Mix in XML- and quote-hostile characters to stress the codecs.
        static constexpr std::string_view alphabet =
            "abcdefghijklmnopqrstuvwxyz 0123456789<>&\"'\\\n\t";
        std::size_t len = roll(9);
        std::string out;
        for (std::size_t i = 0; i < len; ++i) {
            out += alphabet[roll(alphabet.size())];
        }
        return out;
    }

    std::string gen_ident() {
        static constexpr std::string_view head = "abcdefghijklmnopqrstuvwxyz";
        static constexpr std::string_view tail =
            "abcdefghijklmnopqrstuvwxyz0123456789_";
        std::string out(1, head[roll(head.size())]);
        std::size_t len = roll(8);
        for (std::size_t i = 0; i < len; ++i) {
            out += tail[roll(tail.size())];
        }
        return out;
    }

    const SchemaEnv& env_;
    std::mt19937_64& rng_;
    const GenOptions& opts_;
    std::map<std::string, int> need_;
};

}  // namespace

Value random_value(const SchemaEnv& env, std::string_view type,
                   std::mt19937_64& rng, const GenOptions& opts) {
    Generator gen(env, rng, opts);
    return gen.gen_type(type, opts.max_depth);
}

}  // namespace testsupport
