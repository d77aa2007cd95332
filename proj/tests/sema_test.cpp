#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asdl/parser.hpp>
#include <asdl/schema.hpp>

#include "support/util.hpp"

using namespace asdl;
using testsupport::fixture;
using testsupport::load_fixture_env;

namespace {

SchemaEnv check_text(const char* text) { return check(parse_spec(text)); }

CheckErrc code_of(const char* text) {
    try {
        check_text(text);
    } catch (const CheckError& e) {
        return e.code();
    }
    throw std::runtime_error("expected a check error");
}

}  // namespace

TEST_CASE("classification follows the all-nullary rule") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK(env.type("binop").enum_like);
    CHECK_FALSE(env.type("stm").enum_like);
    CHECK_FALSE(env.type("exp").enum_like);
    CHECK(env.type("real").kind == TypeKind::Product);
}

TEST_CASE("items is not enum-like because its constructors carry fields") {
    SchemaEnv env = load_fixture_env("rcc.asdl");
    CHECK_FALSE(env.type("item").enum_like);
    CHECK_FALSE(env.type("type").enum_like);  // attributes also disqualify
}

TEST_CASE("attributes alone disqualify enum classification") {
    SchemaEnv env =
        check_text("module M { t = A | B attributes(int tag_value) }");
    CHECK_FALSE(env.type("t").enum_like);
}

TEST_CASE("undefined types are reported with their name") {
    try {
        check_text("module M { e = ID(ident) }");
        FAIL_CHECK("expected a check error");
    } catch (const CheckError& e) {
        CHECK(e.code() == CheckErrc::UndefinedType);
        CHECK(e.name() == "ident");
    }
}

TEST_CASE("duplicate definitions are rejected") {
    CHECK(code_of("module M { t = A t = B }") == CheckErrc::DuplicateTypeDef);
    CHECK(code_of("module M { t = A | A }") ==
          CheckErrc::DuplicateConstructor);
    CHECK(code_of("module M { t = A u = A }") ==
          CheckErrc::DuplicateConstructor);  // unique module-wide
    CHECK(code_of("module M { t = A(int x, int x) }") ==
          CheckErrc::DuplicateFieldName);
}

TEST_CASE("generated names may not collide with declared ones") {
    CHECK(code_of("module M { t = A(int int1, int) }") ==
          CheckErrc::DuplicateFieldName);
}

TEST_CASE("products may not carry attributes") {
    CHECK(code_of("module M { p = (int x) attributes(int y) }") ==
          CheckErrc::AttributesOnProduct);
}

TEST_CASE("recursive and mutually recursive references resolve") {
    SchemaEnv env = check_text(
        "module M { a = LEAF(int) | NODE(b, b) b = WRAP(a) | END }");
    CHECK(env.type("a").constructors[1].fields[0].type_name == "b");
    CHECK(env.tag_of("b", "END") == 2);
}

TEST_CASE("effective names number unnamed fields per base type") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK(effective_field_names(env.constructor("stm", "SEQ")) ==
          std::vector<std::string>{"stm1", "stm2"});
    CHECK(effective_field_names(env.constructor("stm", "PRINT")) ==
          std::vector<std::string>{"exp_list1"});
    CHECK(effective_field_names(env.constructor("stm", "ASGN")) ==
          std::vector<std::string>{"identifier1", "exp1"});
    CHECK(effective_field_names(env.constructor("exp", "OP")) ==
          std::vector<std::string>{"binop1", "exp1", "exp2"});
}

TEST_CASE("declared names win and do not consume numbering") {
    SchemaEnv env = load_fixture_env("ir_named.asdl");
    CHECK(effective_field_names(env.constructor("stm", "ASGN")) ==
          std::vector<std::string>{"id", "e"});
    SchemaEnv mixed = check_text("module M { t = A(int first, int, int) }");
    CHECK(effective_field_names(mixed.constructor("t", "A")) ==
          std::vector<std::string>{"first", "int1", "int2"});
}

TEST_CASE("attributes are a common prefix of every constructor") {
    SchemaEnv env = load_fixture_env("ir_attrs.asdl");
    const CheckedType& stm = env.type("stm");
    REQUIRE(stm.attributes.size() == 1);
    for (const ConstructorDef& ctor : stm.constructors) {
        REQUIRE(!ctor.effective_fields.empty());
        CHECK(ctor.effective_fields[0].name == "lineno");
    }
    CHECK(effective_field_names(env.constructor("stm", "SEQ")) ==
          std::vector<std::string>{"lineno", "first", "rest"});
}

TEST_CASE("tags are 1-based declaration indexes") {
    SchemaEnv ir = load_fixture_env("ir.asdl");
    CHECK(ir.tag_of("stm", "SEQ") == 1);
    CHECK(ir.tag_of("binop", "DIV") == 4);
    SchemaEnv rcc = load_fixture_env("rcc.asdl");
    CHECK(rcc.tag_of("node", "ASGN") == 4);
    CHECK(rcc.tag_of("node", "CSE") == 17);
    CHECK(rcc.tag_of("interface", "Forest") == 16);
}

TEST_CASE("unknown constructors and types raise") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK_THROWS_AS(env.tag_of("stm", "NOPE"), CheckError);
    CHECK_THROWS_AS(env.type("nope"), CheckError);
    try {
        env.tag_of("stm", "NOPE");
    } catch (const CheckError& e) {
        CHECK(e.code() == CheckErrc::UnknownConstructor);
    }
}

TEST_CASE("check is deterministic") {
    RawSpec spec = parse_spec(fixture("rcc.asdl"));
    SchemaEnv a = check(spec);
    SchemaEnv b = check(spec);
    REQUIRE(a.types().size() == b.types().size());
    for (std::size_t i = 0; i < a.types().size(); ++i) {
        const CheckedType& ta = a.types()[i];
        const CheckedType& tb = b.types()[i];
        CHECK(ta.name == tb.name);
        CHECK(ta.enum_like == tb.enum_like);
        REQUIRE(ta.constructors.size() == tb.constructors.size());
        for (std::size_t c = 0; c < ta.constructors.size(); ++c) {
            CHECK(ta.constructors[c].tag == tb.constructors[c].tag);
            CHECK(effective_field_names(ta.constructors[c]) ==
                  effective_field_names(tb.constructors[c]));
        }
    }
}

TEST_CASE("resolution is total after a successful check") {
    SchemaEnv env = load_fixture_env("rcc.asdl");
    for (const CheckedType& t : env.types()) {
        auto resolved = [&](const std::vector<FieldDef>& fields) {
            for (const FieldDef& f : fields) {
                if (!is_builtin_type(f.type_name)) {
                    CHECK(env.find_type(f.type_name) != nullptr);
                }
            }
        };
        resolved(t.fields);
        resolved(t.attributes);
        for (const ConstructorDef& c : t.constructors) {
            resolved(c.effective_fields);
        }
    }
}

TEST_CASE("classification soundness: enum-like iff all effective fields empty") {
    for (const char* name : {"ir.asdl", "ir_attrs.asdl", "rcc.asdl",
                             "irt.asdl"}) {
        SchemaEnv env = load_fixture_env(name);
        for (const CheckedType& t : env.types()) {
            if (t.kind != TypeKind::Sum) continue;
            bool all_empty = true;
            for (const ConstructorDef& c : t.constructors) {
                if (!c.effective_fields.empty()) all_empty = false;
            }
            CHECK(t.enum_like == all_empty);
        }
    }
}
