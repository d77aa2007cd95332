#include <asdl/codegen.hpp>

#include <set>

namespace asdl::codegen {

namespace {

const std::set<std::string>& reserved_names() {
    // C++ keywords plus the locals the generated bodies use.
    static const std::set<std::string> names = {
        "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand",
        "bitor", "bool", "break", "case", "catch", "char", "char8_t",
        "char16_t", "char32_t", "class", "compl", "concept", "const",
        "consteval", "constexpr", "constinit", "const_cast", "continue",
        "co_await", "co_return", "co_yield", "decltype", "default", "delete",
        "do", "double", "dynamic_cast", "else", "enum", "explicit", "export",
        "extern", "false", "float", "for", "friend", "goto", "if", "inline",
        "int", "long", "mutable", "namespace", "new", "noexcept", "not",
        "not_eq", "nullptr", "operator", "or", "or_eq", "private",
        "protected", "public", "register", "reinterpret_cast", "requires",
        "return", "short", "signed", "sizeof", "static", "static_assert",
        "static_cast", "struct", "switch", "template", "this",
        "thread_local", "throw", "true", "try", "typedef", "typeid",
        "typename", "union", "unsigned", "using", "virtual", "void",
        "volatile", "wchar_t", "while", "xor", "xor_eq",
        "s_", "x_", "v_", "n_", "i_", "e_", "tag_",
    };
    return names;
}

std::string member_name(const std::string& name) {
    std::string out = name;
    while (reserved_names().count(out)) out += '_';
    return out;
}

/// One concrete backend: C++ against the shipped runtime. Type names are
/// <Module>_<type>_ty and constructor entry points <Module>_<Ctor>, with a
/// <Module>_read_<type> / <Module>_write_<type> codec pair per type.
class CppBackend final : public Backend {
public:
    std::string name() const override { return "cpp"; }

    void begin_unit(const SchemaEnv& env) override {
        defs_.clear();
        impl_.clear();
        module_ = env.module_name();

        defs_ += "// Generated from module " + module_ +
                 " by asdlc gen --backend cpp. Do not edit.\n";
        defs_ += "#pragma once\n\n";
        defs_ += "#include <cstdint>\n";
        defs_ += "#include <memory>\n";
        defs_ += "#include <variant>\n\n";
        defs_ += "#include <asdl/runtime.hpp>\n";

        bool any_record = false;
        for (const CheckedType& t : env.types()) {
            if (!t.enum_like) any_record = true;
        }
        if (any_record) {
            defs_ += '\n';
            for (const CheckedType& t : env.types()) {
                if (t.enum_like) continue;
                defs_ += "struct " + struct_name(t.name) + ";\n";
            }
            defs_ += '\n';
            for (const CheckedType& t : env.types()) {
                if (t.enum_like) continue;
                defs_ += "using " + alias_name(t.name) + " = std::shared_ptr<" +
                         struct_name(t.name) + ">;\n";
            }
        }

        impl_ += "// Generated from module " + module_ +
                 " by asdlc gen --backend cpp. Do not edit.\n";
        impl_ += "#include \"" + module_ + ".hpp\"\n\n";
        impl_ += "#include <cstdlib>\n";
        impl_ += "#include <utility>\n";
    }

    void emit_enum_type(const SchemaEnv&, const CheckedType& t) override {
        defs_ += "\nenum " + alias_name(t.name) + " {\n";
        for (const ConstructorDef& ctor : t.constructors) {
            defs_ += "    " + enum_name(ctor.name) + ",\n";
        }
        defs_ += "};\n";
    }

    void emit_sum_type(const SchemaEnv& env, const CheckedType& t) override {
        // kind and v may not shadow an attribute member.
        std::string kind = free_member(t, "kind");
        std::string variant = free_member(t, "v");
        defs_ += "\nstruct " + struct_name(t.name) + " {\n";
        for (const FieldDef& f : t.attributes) {
            defs_ += "    " + storage_type(env, f) + " " +
                     member_name(f.name) + ";\n";
        }
        defs_ += "    enum Kind {\n";
        for (const ConstructorDef& ctor : t.constructors) {
            defs_ += "        " + enum_name(ctor.name) + ",\n";
        }
        defs_ += "    };\n";
        for (const ConstructorDef& ctor : t.constructors) {
            defs_ += "    struct " + variant_name(ctor.name) + " {\n";
            for (const FieldDef& f : ctor.fields) {
                defs_ += "        " + storage_type(env, f) + " " +
                         member_name(f.name) + ";\n";
            }
            defs_ += "    };\n";
        }
        defs_ += "    Kind " + kind + ";\n";
        defs_ += "    std::variant<";
        for (std::size_t i = 0; i < t.constructors.size(); ++i) {
            if (i) defs_ += ", ";
            defs_ += variant_name(t.constructors[i].name);
        }
        defs_ += "> " + variant + ";\n";
        defs_ += "};\n";
    }

    void emit_product_type(const SchemaEnv& env,
                           const CheckedType& t) override {
        defs_ += "\nstruct " + struct_name(t.name) + " {\n";
        for (const FieldDef& f : t.fields) {
            defs_ += "    " + storage_type(env, f) + " " +
                     member_name(f.name) + ";\n";
        }
        defs_ += "};\n";
    }

    void emit_constructors(const SchemaEnv& env,
                           const CheckedType& t) override {
        if (t.kind == TypeKind::Product) {
            std::string sig = alias_name(t.name) + " " + prefixed(t.name) +
                              "(" + param_list(env, t.fields) + ")";
            defs_ += "\n" + sig + ";\n";
            impl_ += "\n" + sig + " {\n";
            impl_ += "    auto x_ = std::make_shared<" + struct_name(t.name) +
                     ">();\n";
            for (const FieldDef& f : t.fields) {
                impl_ += "    x_->" + member_name(f.name) + " = std::move(" +
                         member_name(f.name) + ");\n";
            }
            impl_ += "    return x_;\n";
            impl_ += "}\n";
            return;
        }
        if (t.enum_like) {
            defs_ += '\n';
            for (const ConstructorDef& ctor : t.constructors) {
                defs_ += "inline " + alias_name(t.name) + " " +
                         prefixed(ctor.name) + "() { return " +
                         enum_name(ctor.name) + "; }\n";
            }
            return;
        }
        std::string kind = free_member(t, "kind");
        std::string variant = free_member(t, "v");
        defs_ += '\n';
        for (const ConstructorDef& ctor : t.constructors) {
            std::string sig = alias_name(t.name) + " " + prefixed(ctor.name) +
                              "(" + param_list(env, ctor.effective_fields) +
                              ")";
            defs_ += sig + ";\n";
            impl_ += "\n" + sig + " {\n";
            impl_ += "    auto x_ = std::make_shared<" + struct_name(t.name) +
                     ">();\n";
            for (const FieldDef& f : t.attributes) {
                impl_ += "    x_->" + member_name(f.name) + " = std::move(" +
                         member_name(f.name) + ");\n";
            }
            impl_ += "    x_->" + kind + " = " + struct_name(t.name) + "::" +
                     enum_name(ctor.name) + ";\n";
            impl_ += "    x_->" + variant + " = " + struct_name(t.name) +
                     "::" + variant_name(ctor.name) + "{";
            for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
                if (i) impl_ += ", ";
                impl_ += "std::move(" + member_name(ctor.fields[i].name) + ")";
            }
            impl_ += "};\n";
            impl_ += "    return x_;\n";
            impl_ += "}\n";
        }
    }

    void emit_codec(const SchemaEnv& env, const CheckedType& t) override {
        std::string reader_sig =
            alias_name(t.name) + " " + prefixed("read_" + t.name) +
            "(asdl::rt::instream_ty& s_)";
        bool by_value = t.enum_like;
        std::string writer_sig =
            "void " + prefixed("write_" + t.name) + "(" +
            (by_value ? alias_name(t.name) + " x_"
                      : "const " + alias_name(t.name) + "& x_") +
            ", asdl::rt::outstream_ty& s_)";
        defs_ += "\n" + reader_sig + ";\n" + writer_sig + ";\n";

        if (t.enum_like) {
            impl_ += "\n" + reader_sig + " {\n";
            impl_ += "    return static_cast<" + alias_name(t.name) +
                     ">(asdl::rt::read_tag(s_, " +
                     std::to_string(t.constructors.size()) + ", \"" + module_ +
                     "." + t.name + "\") - 1);\n";
            impl_ += "}\n";
            impl_ += "\n" + writer_sig + " {\n";
            impl_ += "    asdl::rt::write_uint(static_cast<std::uint64_t>(x_)"
                     " + 1, s_);\n";
            impl_ += "}\n";
            return;
        }
        if (t.kind == TypeKind::Product) {
            impl_ += "\n" + reader_sig + " {\n";
            for (const FieldDef& f : t.fields) {
                emit_field_read(env, f, "    ");
            }
            impl_ += "    return " + prefixed(t.name) + "(" +
                     move_args(t.fields) + ");\n";
            impl_ += "}\n";
            impl_ += "\n" + writer_sig + " {\n";
            for (const FieldDef& f : t.fields) {
                emit_field_write(env, f, "x_->" + member_name(f.name), "    ");
            }
            impl_ += "}\n";
            return;
        }

        std::string kind = free_member(t, "kind");
        std::string variant = free_member(t, "v");
        impl_ += "\n" + reader_sig + " {\n";
        impl_ += "    const std::uint64_t tag_ = asdl::rt::read_tag(s_, " +
                 std::to_string(t.constructors.size()) + ", \"" + module_ +
                 "." + t.name + "\");\n";
        for (const FieldDef& f : t.attributes) {
            emit_field_read(env, f, "    ");
        }
        impl_ += "    switch (tag_) {\n";
        for (const ConstructorDef& ctor : t.constructors) {
            impl_ += "    case " + std::to_string(ctor.tag) + ": {\n";
            for (const FieldDef& f : ctor.fields) {
                emit_field_read(env, f, "        ");
            }
            impl_ += "        return " + prefixed(ctor.name) + "(" +
                     move_args(ctor.effective_fields) + ");\n";
            impl_ += "    }\n";
        }
        impl_ += "    }\n";
        impl_ += "    std::abort();  // read_tag bounds tag_\n";
        impl_ += "}\n";

        impl_ += "\n" + writer_sig + " {\n";
        impl_ += "    asdl::rt::write_uint(static_cast<std::uint64_t>(x_->" +
                 kind + ") + 1, s_);\n";
        for (const FieldDef& f : t.attributes) {
            emit_field_write(env, f, "x_->" + member_name(f.name), "    ");
        }
        impl_ += "    switch (x_->" + kind + ") {\n";
        for (const ConstructorDef& ctor : t.constructors) {
            impl_ += "    case " + struct_name(t.name) + "::" +
                     enum_name(ctor.name) + ": {\n";
            if (!ctor.fields.empty()) {
                impl_ += "        const auto& v_ = std::get<" +
                         struct_name(t.name) + "::" +
                         variant_name(ctor.name) + ">(x_->" + variant +
                         ");\n";
                for (const FieldDef& f : ctor.fields) {
                    emit_field_write(env, f, "v_." + member_name(f.name),
                                     "        ");
                }
            }
            impl_ += "        break;\n";
            impl_ += "    }\n";
        }
        impl_ += "    }\n";
        impl_ += "}\n";
    }

    GeneratedUnit finish(const SchemaEnv&) override {
        GeneratedUnit unit;
        unit.files.push_back({module_ + ".hpp", defs_});
        unit.files.push_back({module_ + ".cpp", impl_});
        return unit;
    }

private:
    std::string prefixed(const std::string& name) const {
        return module_ + "_" + name;
    }
    std::string struct_name(const std::string& type) const {
        return prefixed(type + "_s");
    }
    std::string alias_name(const std::string& type) const {
        return prefixed(type + "_ty");
    }
    std::string enum_name(const std::string& ctor) const {
        return prefixed(ctor + "_enum");
    }
    std::string variant_name(const std::string& ctor) const {
        return prefixed(ctor + "_v");
    }

    /// A member name for generated state that no attribute uses.
    static std::string free_member(const CheckedType& t, std::string base) {
        auto taken = [&](const std::string& name) {
            for (const FieldDef& f : t.attributes) {
                if (member_name(f.name) == name) return true;
            }
            return false;
        };
        while (taken(base)) base += '_';
        return base;
    }

    std::string base_type(const SchemaEnv& env,
                          const std::string& type_name) const {
        if (type_name == "int") return "asdl::rt::int_ty";
        if (type_name == "string") return "asdl::rt::string_ty";
        if (type_name == "identifier") return "asdl::rt::identifier_ty";
        (void)env;
        return alias_name(type_name);
    }

    std::string storage_type(const SchemaEnv& env, const FieldDef& f) const {
        std::string base = base_type(env, f.type_name);
        return f.sequence ? "asdl::rt::list_ty<" + base + ">" : base;
    }

    std::string param_list(const SchemaEnv& env,
                           const std::vector<FieldDef>& fields) const {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ", ";
            out += storage_type(env, fields[i]) + " " +
                   member_name(fields[i].name);
        }
        return out;
    }

    static std::string move_args(const std::vector<FieldDef>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ", ";
            out += "std::move(" + member_name(fields[i].name) + ")";
        }
        return out;
    }

    std::string read_expr(const SchemaEnv& env,
                          const std::string& type_name) const {
        if (type_name == "int") return "asdl::rt::read_int(s_)";
        if (type_name == "string") return "asdl::rt::read_string(s_)";
        if (type_name == "identifier") return "asdl::rt::read_identifier(s_)";
        (void)env;
        return prefixed("read_" + type_name) + "(s_)";
    }

    void emit_write_call(const SchemaEnv& env, const std::string& type_name,
                         const std::string& expr, const std::string& indent) {
        if (type_name == "int") {
            impl_ += indent + "asdl::rt::write_int(" + expr + ", s_);\n";
        } else if (type_name == "string") {
            impl_ += indent + "asdl::rt::write_string(" + expr + ", s_);\n";
        } else if (type_name == "identifier") {
            impl_ += indent + "asdl::rt::write_identifier(" + expr + ", s_);\n";
        } else {
            (void)env;
            impl_ += indent + prefixed("write_" + type_name) + "(" + expr +
                     ", s_);\n";
        }
    }

    void emit_field_read(const SchemaEnv& env, const FieldDef& f,
                         const std::string& indent) {
        std::string local = member_name(f.name);
        if (!f.sequence) {
            impl_ += indent + "auto " + local + " = " +
                     read_expr(env, f.type_name) + ";\n";
            return;
        }
        std::string base = base_type(env, f.type_name);
        impl_ += indent + "auto " + local + " = asdl::rt::list_ty<" + base +
                 ">();\n";
        impl_ += indent + "{\n";
        impl_ += indent + "    const std::size_t n_ = asdl::rt::read_count(s_);\n";
        impl_ += indent + "    " + local + ".reserve(n_);\n";
        impl_ += indent + "    for (std::size_t i_ = 0; i_ < n_; ++i_) {\n";
        impl_ += indent + "        " + local + ".push_back(" +
                 read_expr(env, f.type_name) + ");\n";
        impl_ += indent + "    }\n";
        impl_ += indent + "}\n";
    }

    void emit_field_write(const SchemaEnv& env, const FieldDef& f,
                          const std::string& expr, const std::string& indent) {
        if (!f.sequence) {
            emit_write_call(env, f.type_name, expr, indent);
            return;
        }
        impl_ += indent + "asdl::rt::write_count(" + expr + ".size(), s_);\n";
        impl_ += indent + "for (const auto& e_ : " + expr + ") {\n";
        emit_write_call(env, f.type_name, "e_", indent + "    ");
        impl_ += indent + "}\n";
    }

    std::string module_;
    std::string defs_;
    std::string impl_;
};

}  // namespace

std::unique_ptr<Backend> make_backend(std::string_view name) {
    if (name == "cpp") return std::make_unique<CppBackend>();
    return nullptr;
}

}  // namespace asdl::codegen
