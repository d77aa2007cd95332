#include <asdl/parser.hpp>

#include <asdl/lexer.hpp>

namespace asdl {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    RawSpec parse() {
        RawSpec spec;
        spec.span = peek().span;
        expect(TokenKind::Module);
        spec.module_name = module_name();
        expect(TokenKind::LBrace);
        while (!at(TokenKind::RBrace)) {
            spec.definitions.push_back(type_def());
        }
        expect(TokenKind::RBrace);
        if (!at(TokenKind::EndOfFile)) {
            fail("exactly one module per file", {token_kind_name(TokenKind::EndOfFile)});
        }
        return spec;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(TokenKind kind) const { return peek().kind == kind; }

    Token advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what,
                           std::vector<std::string> expected) {
        std::string msg = "expected " + what + ", got ";
        msg += at(TokenKind::EndOfFile) ? "end of input"
                                        : "'" + peek().text + "'";
        throw ParseError(peek().span, msg, std::move(expected));
    }

    Token expect(TokenKind kind) {
        if (!at(kind)) fail(token_kind_name(kind), {token_kind_name(kind)});
        return advance();
    }

    std::string module_name() {
        if (at(TokenKind::LowerIdent) || at(TokenKind::UpperIdent)) {
            return advance().text;
        }
        fail("module name", {"module name"});
    }

    RawTypeDef type_def() {
        RawTypeDef def;
        if (!at(TokenKind::LowerIdent)) {
            if (at(TokenKind::UpperIdent)) {
                throw ParseError(peek().span,
                                 "type names must start with a lowercase "
                                 "letter: '" + peek().text + "'");
            }
            fail("type name", {token_kind_name(TokenKind::LowerIdent)});
        }
        Token name = advance();
        def.name = name.text;
        def.span = name.span;
        expect(TokenKind::Equals);
        if (at(TokenKind::LParen)) {
            ProductBody body;
            body.fields = paren_field_list();
            if (at(TokenKind::Attributes)) body.attributes = attribute_list();
            def.body = std::move(body);
        } else if (at(TokenKind::UpperIdent)) {
            SumBody body;
            body.constructors.push_back(constructor());
            while (at(TokenKind::Pipe)) {
                advance();
                body.constructors.push_back(constructor());
            }
            if (at(TokenKind::Attributes)) body.attributes = attribute_list();
            def.body = std::move(body);
        } else {
            fail("'(' or a constructor name",
                 {token_kind_name(TokenKind::LParen),
                  token_kind_name(TokenKind::UpperIdent)});
        }
        return def;
    }

    RawConstructor constructor() {
        RawConstructor ctor;
        if (!at(TokenKind::UpperIdent)) {
            if (at(TokenKind::LowerIdent)) {
                throw ParseError(peek().span,
                                 "constructor names must start with an "
                                 "uppercase letter: '" + peek().text + "'");
            }
            fail("constructor name", {token_kind_name(TokenKind::UpperIdent)});
        }
        Token name = advance();
        ctor.name = name.text;
        ctor.span = name.span;
        if (at(TokenKind::LParen)) ctor.fields = paren_field_list();
        return ctor;
    }

    std::vector<RawField> attribute_list() {
        expect(TokenKind::Attributes);
        return paren_field_list();
    }

    std::vector<RawField> paren_field_list() {
        expect(TokenKind::LParen);
        std::vector<RawField> fields;
        fields.push_back(field());
        while (at(TokenKind::Comma)) {
            advance();
            fields.push_back(field());
        }
        expect(TokenKind::RParen);
        return fields;
    }

    RawField field() {
        RawField f;
        if (!at(TokenKind::LowerIdent)) {
            if (at(TokenKind::UpperIdent)) {
                throw ParseError(peek().span,
                                 "type names must start with a lowercase "
                                 "letter: '" + peek().text + "'");
            }
            fail("field type name", {token_kind_name(TokenKind::LowerIdent)});
        }
        Token type = advance();
        f.type_name = type.text;
        f.span = type.span;
        if (at(TokenKind::Question)) {
            throw ParseError(peek().span,
                             "the optional qualifier '?' is not supported; "
                             "only '*' sequences are");
        }
        if (at(TokenKind::Star)) {
            advance();
            f.sequence = true;
        }
        if (at(TokenKind::LowerIdent)) f.name = advance().text;
        return f;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

RawSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

namespace {

std::string field_text(const RawField& f) {
    std::string out = f.type_name;
    if (f.sequence) out += '*';
    if (!f.name.empty()) {
        out += ' ';
        out += f.name;
    }
    return out;
}

std::string field_list_text(const std::vector<RawField>& fields) {
    std::string out = "(";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ", ";
        out += field_text(fields[i]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string pretty_print(const RawSpec& spec) {
    std::string out = "module " + spec.module_name + " {\n";
    for (std::size_t d = 0; d < spec.definitions.size(); ++d) {
        const RawTypeDef& def = spec.definitions[d];
        out += '\n';
        std::string head = def.name + " = ";
        std::string cont(def.name.size() + 1, ' ');
        if (def.is_sum()) {
            const SumBody& sum = def.sum();
            for (std::size_t c = 0; c < sum.constructors.size(); ++c) {
                const RawConstructor& ctor = sum.constructors[c];
                out += c == 0 ? head : cont + "| ";
                out += ctor.name;
                if (!ctor.fields.empty()) out += field_list_text(ctor.fields);
                out += '\n';
            }
            if (!sum.attributes.empty()) {
                out += cont + "  attributes" + field_list_text(sum.attributes);
                out += '\n';
            }
        } else {
            out += head + field_list_text(def.product().fields);
            out += '\n';
            if (!def.product().attributes.empty()) {
                out += cont + "  attributes" +
                       field_list_text(def.product().attributes);
                out += '\n';
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace asdl
