#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asdl/lexer.hpp>
#include <asdl/parser.hpp>

#include "support/util.hpp"

using namespace asdl;
using testsupport::fixture;

TEST_CASE("tokenize counts lexemes and terminates with end-of-file") {
    auto tokens = tokenize("module IR { stm = SEQ(stm, stm) }");
    REQUIRE(tokens.size() == 13);  // 12 lexemes plus the end-of-file token
    CHECK(tokens[0].kind == TokenKind::Module);
    CHECK(tokens[11].kind == TokenKind::RBrace);
    CHECK(tokens.back().kind == TokenKind::EndOfFile);
}

TEST_CASE("tokenize keeps alternation order") {
    auto tokens = tokenize("binop = ADD | SUB | MUL | DIV");
    std::vector<std::string> ctors;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::UpperIdent) ctors.push_back(t.text);
    }
    CHECK(ctors == std::vector<std::string>{"ADD", "SUB", "MUL", "DIV"});
}

TEST_CASE("field names lex as plain identifiers") {
    auto tokens = tokenize("stm = SEQ(stm first, stm rest)");
    int lower = 0;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::LowerIdent) ++lower;
    }
    CHECK(lower == 5);  // stm, stm, first, stm, rest
}

TEST_CASE("tokens carry 1-based source spans") {
    auto tokens = tokenize("module M {\n  t = A\n}");
    CHECK(tokens[0].span.line == 1);
    CHECK(tokens[0].span.column == 1);
    const Token& t = tokens[3];  // "t"
    CHECK(t.text == "t");
    CHECK(t.span.line == 2);
    CHECK(t.span.column == 3);
}

TEST_CASE("comments run to end of line") {
    auto tokens = tokenize("-- header comment\nmodule M { } -- trailing");
    CHECK(tokens.size() == 5);  // module M { } eof
}

TEST_CASE("illegal characters carry their span") {
    CHECK_THROWS_AS(tokenize("module M { t = A } #"), IllegalCharacterError);
    try {
        tokenize("module M {\n  $ }");
    } catch (const IllegalCharacterError& e) {
        CHECK(e.byte() == '$');
        CHECK(e.span().line == 2);
        CHECK(e.span().column == 3);
    }
}

TEST_CASE("the IR module parses into its four definitions") {
    RawSpec spec = parse_spec(fixture("ir.asdl"));
    CHECK(spec.module_name == "IR");
    REQUIRE(spec.definitions.size() == 4);
    CHECK(spec.definitions[0].name == "stm");
    CHECK(spec.definitions[1].name == "exp");
    CHECK(spec.definitions[2].name == "real");
    CHECK(spec.definitions[3].name == "binop");
    CHECK(spec.definitions[2].is_sum() == false);
    CHECK(spec.definitions[3].sum().constructors.size() == 4);
}

TEST_CASE("named fields survive parsing") {
    RawSpec spec = parse_spec(fixture("ir_named.asdl"));
    const SumBody& stm = spec.definitions[0].sum();
    REQUIRE(stm.constructors.size() == 3);
    CHECK(stm.constructors[0].fields[0].name == "first");
    CHECK(stm.constructors[0].fields[1].name == "rest");
    const RawField& elist = stm.constructors[2].fields[0];
    CHECK(elist.name == "elist");
    CHECK(elist.sequence);
}

TEST_CASE("attributes attach to the sum") {
    RawSpec spec = parse_spec(fixture("ir_attrs.asdl"));
    const SumBody& stm = spec.definitions[0].sum();
    REQUIRE(stm.attributes.size() == 1);
    CHECK(stm.attributes[0].type_name == "int");
    CHECK(stm.attributes[0].name == "lineno");
}

TEST_CASE("an empty module is legal") {
    RawSpec spec = parse_spec("module M { }");
    CHECK(spec.module_name == "M");
    CHECK(spec.definitions.empty());
}

TEST_CASE("the rcc grammar has nine definitions") {
    RawSpec spec = parse_spec(fixture("rcc.asdl"));
    CHECK(spec.module_name == "rcc");
    REQUIRE(spec.definitions.size() == 9);
    std::vector<std::string> names;
    for (const RawTypeDef& def : spec.definitions) names.push_back(def.name);
    CHECK(names == std::vector<std::string>{"program", "item", "symbol",
                                            "field", "enum", "type", "real",
                                            "interface", "node"});
}

TEST_CASE("parse errors point inside the input") {
    auto check_span = [](const char* text) {
        try {
            parse_spec(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.span().line >= 1);
            CHECK(e.span().column >= 1);
            CHECK(e.span().offset <= std::string(text).size());
        }
    };
    check_span("");
    check_span("module");
    check_span("module M {");
    check_span("module M { t = }");
    check_span("module M { t = A( }");
    check_span("module M { t = A(int, }");
    check_span("module M { t = (int) extra }");
}

TEST_CASE("parse errors carry an expected set") {
    try {
        parse_spec("module M { t = A | }");
        FAIL_CHECK("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(!e.expected().empty());
    }
}

TEST_CASE("the optional qualifier is rejected with its own message") {
    try {
        parse_spec("module M { t = A(int? x) }");
        FAIL_CHECK("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("optional qualifier") !=
              std::string::npos);
    }
}

TEST_CASE("exactly one module per file") {
    CHECK_THROWS_AS(parse_spec("module A { } module B { }"), ParseError);
}

TEST_CASE("name case rules are enforced at parse time") {
    CHECK_THROWS_AS(parse_spec("module M { T = A }"), ParseError);
    CHECK_THROWS_AS(parse_spec("module M { t = a }"), ParseError);
    CHECK_THROWS_AS(parse_spec("module M { t = A(Int x) }"), ParseError);
}

TEST_CASE("pretty printing lays out one constructor per line") {
    std::string text = pretty_print(parse_spec("module M { t = A | B }"));
    CHECK(text.find("t = A\n  | B\n") != std::string::npos);
}

TEST_CASE("pretty printing round trips every bundled fixture") {
    for (const char* name : {"ir.asdl", "ir_named.asdl", "ir_attrs.asdl",
                             "rcc.asdl", "irt.asdl"}) {
        CAPTURE(name);
        RawSpec once = parse_spec(fixture(name));
        RawSpec twice = parse_spec(pretty_print(once));
        CHECK(structurally_equal(once, twice));
        CHECK(structurally_equal(parse_spec(pretty_print(twice)), twice));
    }
}

TEST_CASE("pretty printing round trips an empty module") {
    RawSpec spec = parse_spec("module M { }");
    CHECK(structurally_equal(parse_spec(pretty_print(spec)), spec));
}

TEST_CASE("constructor order matches source order") {
    RawSpec spec = parse_spec(fixture("rcc.asdl"));
    const RawTypeDef* node = nullptr;
    for (const RawTypeDef& def : spec.definitions) {
        if (def.name == "node") node = &def;
    }
    REQUIRE(node != nullptr);
    REQUIRE(node->sum().constructors.size() == 17);
    CHECK(node->sum().constructors[0].name == "CNST");
    CHECK(node->sum().constructors[3].name == "ASGN");
    CHECK(node->sum().constructors[16].name == "CSE");
}
