#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asdl/text_form.hpp>
#include <asdl/value.hpp>
#include <minircc/rcc_schema.hpp>

#include "support/util.hpp"
#include "support/value_gen.hpp"

using namespace asdl;
using testsupport::load_fixture_env;

namespace {

Value icon(const SchemaEnv& env, long long n) {
    return mk_sum(env, "exp", "ICON", {}, {Value::integer(n)});
}

Value id_exp(const SchemaEnv& env, const char* name) {
    return mk_sum(env, "exp", "ID", {}, {Value::identifier(name)});
}

}  // namespace

TEST_CASE("a well-typed statement validates") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value stmt = mk_sum(
        env, "stm", "SEQ", {},
        {mk_sum(env, "stm", "ASGN", {},
                {Value::identifier("a"), icon(env, 1)}),
         mk_sum(env, "stm", "PRINT", {},
                {Value::list({id_exp(env, "a")})})});
    CHECK(validate(env, "stm", stmt).empty());
}

TEST_CASE("arity violations name the path") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value bad = Value::sum("stm", "SEQ", {},
                           {mk_sum(env, "stm", "PRINT", {},
                                   {Value::list({})})});
    auto violations = validate(env, "stm", bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].path == "stm/SEQ");
}

TEST_CASE("missing attributes are named in the violation") {
    const SchemaEnv& env = minircc::rcc_env();
    Value bad = Value::sum("node", "ASGN", {},
                           {Value::sum("node", "RET",
                                       {Value::integer(5), Value::integer(0)},
                                       {}),
                            Value::sum("node", "RET",
                                       {Value::integer(5), Value::integer(0)},
                                       {}),
                            Value::integer(4), Value::integer(4)});
    auto violations = validate(env, "node", bad);
    REQUIRE(!violations.empty());
    CHECK(violations[0].reason.find("suffix") != std::string::npos);
}

TEST_CASE("list elements are checked against the element type") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value bad = Value::sum("stm", "PRINT", {},
                           {Value::list({Value::integer(1)})});
    auto violations = validate(env, "stm", bad);
    REQUIRE(!violations.empty());
    CHECK(violations[0].path.find("exp_list1[0]") != std::string::npos);
}

TEST_CASE("checked constructors reject bad values and accept good ones") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value add = mk_sum(env, "binop", "ADD", {}, {});
    CHECK(add.constructor() == "ADD");
    CHECK_THROWS_AS(mk_sum(env, "binop", "ADD", {}, {Value::integer(1)}),
                    ConformanceError);
    CHECK_THROWS_AS(mk_sum(env, "stm", "SEQ", {}, {icon(env, 1), icon(env, 2)}),
                    ConformanceError);
    CHECK_THROWS_AS(mk_product(env, "real", {Value::integer(1)}),
                    ConformanceError);
}

TEST_CASE("the worked symbol example builds") {
    const SchemaEnv& env = minircc::rcc_env();
    Value symbol = mk_product(
        env, "symbol",
        {Value::identifier("root"), Value::integer(10),
         Value::integer(static_cast<int>(minircc::Scope::Local)),
         Value::integer(static_cast<int>(minircc::Sclass::Auto)),
         Value::integer(120000), Value::integer(minircc::kFlagAddressed)});
    CHECK(validate(env, "symbol", symbol).empty());
    CHECK(symbol.fields()[2].as_int() == 5);
    CHECK(symbol.fields()[3].as_int() == 1);
}

TEST_CASE("the four-byte int type builds") {
    const SchemaEnv& env = minircc::rcc_env();
    Value t = mk_sum(env, "type", "INT",
                     {Value::integer(4), Value::integer(4)}, {});
    CHECK(validate(env, "type", t).empty());
}

TEST_CASE("equality is structural and reflexive") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value a = icon(env, 1);
    Value b = icon(env, 2);
    CHECK(equal(a, a));
    CHECK_FALSE(equal(a, b));
    CHECK(equal(icon(env, 1), icon(env, 1)));
    CHECK_FALSE(equal(a, id_exp(env, "a")));
}

TEST_CASE("identifier equality is interned identity") {
    Value a = Value::identifier("hello");
    Value b = Value::identifier(std::string("hel") + "lo");
    CHECK(a.as_identifier() == b.as_identifier());
    CHECK(&a.as_identifier().str() == &b.as_identifier().str());
    CHECK(equal(a, b));
}

TEST_CASE("integers are not bounded by machine words") {
    Int huge("123456789012345678901234567890");
    Value v = Value::integer(huge);
    CHECK(v.as_int() == huge);
    CHECK(v.as_int().str() == "123456789012345678901234567890");
}

TEST_CASE("random values conform for every type in both grammars") {
    for (const char* name : {"ir.asdl", "rcc.asdl"}) {
        SchemaEnv env = load_fixture_env(name);
        std::mt19937_64 rng(7);
        for (const CheckedType& t : env.types()) {
            for (int i = 0; i < 100; ++i) {
                Value v = testsupport::random_value(env, t.name, rng);
                auto violations = validate(env, t.name, v);
                if (!violations.empty()) {
                    CAPTURE(name);
                    CAPTURE(t.name);
                    CAPTURE(violations[0].path);
                    FAIL_CHECK(violations[0].reason);
                }
            }
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    SchemaEnv env = load_fixture_env("rcc.asdl");
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int i = 0; i < 20; ++i) {
        CHECK(equal(testsupport::random_value(env, "program", a),
                    testsupport::random_value(env, "program", b)));
    }
}

TEST_CASE("text form round trips sums, products, lists, and scalars") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    std::mt19937_64 rng(11);
    for (const CheckedType& t : env.types()) {
        for (int i = 0; i < 200; ++i) {
            Value v = testsupport::random_value(env, t.name, rng);
            std::string text = asdl::text::print_value(env, t.name, v);
            CAPTURE(text);
            Value back = asdl::text::parse_value(env, t.name, text);
            CHECK(equal(v, back));
        }
    }
}

TEST_CASE("text form examples look as documented") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK(asdl::text::print_value(env, "binop",
                                  mk_sum(env, "binop", "ADD", {}, {})) ==
          "(ADD)");
    Value real = mk_product(env, "real",
                            {Value::integer(1), Value::integer(-2)});
    CHECK(asdl::text::print_value(env, "real", real) == "(tuple 1 -2)");
    Value print_stmt = mk_sum(env, "stm", "PRINT",
                              {}, {Value::list({icon(env, 3)})});
    CHECK(asdl::text::print_value(env, "stm", print_stmt) ==
          "(PRINT [(ICON 3)])");
}

TEST_CASE("attribute labels print and re-parse") {
    SchemaEnv env = load_fixture_env("ir_attrs.asdl");
    Value stmt = mk_sum(env, "stm", "ASGN", {Value::integer(7)},
                        {Value::identifier("x"), icon(env, 1)});
    std::string text = asdl::text::print_value(env, "stm", stmt);
    CHECK(text == "(ASGN :lineno 7 x (ICON 1))");
    CHECK(equal(asdl::text::parse_value(env, "stm", text), stmt));
}

TEST_CASE("hostile identifiers print quoted and round trip") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value v = mk_sum(env, "exp", "ID", {},
                     {Value::identifier("two words ( ] \"")});
    std::string text = asdl::text::print_value(env, "exp", v);
    CHECK(equal(asdl::text::parse_value(env, "exp", text), v));
}

TEST_CASE("text parse errors carry positions and reasons") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK_THROWS_AS(asdl::text::parse_value(env, "binop", "(NOPE)"),
                    ParseError);
    CHECK_THROWS_AS(asdl::text::parse_value(env, "binop", "(ADD) junk"),
                    ParseError);
    CHECK_THROWS_AS(asdl::text::parse_value(env, "real", "(tuple 1)"),
                    ParseError);
}
