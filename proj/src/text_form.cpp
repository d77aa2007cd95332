#include <asdl/text_form.hpp>

#include <cctype>

#include <asdl/diag.hpp>

namespace asdl::text {

namespace {

bool bare_safe(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

void append_quoted(std::string& out, std::string_view s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    out += '"';
}

class Printer {
public:
    explicit Printer(const SchemaEnv& env) : env_(env) {}

    std::string print(std::string_view type_name, const Value& v) {
        print_type(type_name, v);
        return std::move(out_);
    }

private:
    void print_fields(const std::vector<FieldDef>& defs,
                      const ValueList& values, bool labeled) {
        for (std::size_t i = 0; i < defs.size(); ++i) {
            out_ += ' ';
            if (labeled) {
                out_ += ':';
                out_ += defs[i].name;
                out_ += ' ';
            }
            print_field(defs[i], values[i]);
        }
    }

    void print_field(const FieldDef& def, const Value& v) {
        if (!def.sequence) {
            print_type(def.type_name, v);
            return;
        }
        out_ += '[';
        const ValueList& elems = v.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) out_ += ' ';
            print_type(def.type_name, elems[i]);
        }
        out_ += ']';
    }

    void print_type(std::string_view type_name, const Value& v) {
        if (type_name == "int") {
            out_ += v.as_int().str();
            return;
        }
        if (type_name == "string") {
            append_quoted(out_, v.as_string());
            return;
        }
        if (type_name == "identifier") {
            std::string_view s = v.as_identifier().view();
            if (bare_safe(s)) {
                out_ += s;
            } else {
                append_quoted(out_, s);
            }
            return;
        }
        const CheckedType& t = env_.type(type_name);
        if (t.kind == TypeKind::Product) {
            out_ += "(tuple";
            print_fields(t.fields, v.fields(), false);
            out_ += ')';
            return;
        }
        const ConstructorDef& ctor = env_.constructor(t.name, v.constructor());
        out_ += '(';
        out_ += ctor.name;
        print_fields(t.attributes, v.attributes(), true);
        print_fields(ctor.fields, v.fields(), false);
        out_ += ')';
    }

    const SchemaEnv& env_;
    std::string out_;
};

class TextParser {
public:
    TextParser(const SchemaEnv& env, std::string_view text)
        : env_(env), text_(text) {}

    Value parse_one(std::string_view type_name) {
        Value v = parse_type(type_name);
        skip_space();
        if (pos_ < text_.size()) fail("trailing input after the value");
        return v;
    }

    std::vector<Value> parse_many(std::string_view type_name) {
        std::vector<Value> out;
        skip_space();
        while (pos_ < text_.size()) {
            out.push_back(parse_type(type_name));
            skip_space();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(span_here(), message);
    }

    SourceSpan span_here() const {
        SourceSpan span;
        span.offset = pos_;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++span.line;
                span.column = 1;
            } else {
                ++span.column;
            }
        }
        return span;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    bool try_consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string bare_token() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string quoted_string() {
        expect('"');
        std::string out;
        while (true) {
            if (pos_ >= text_.size()) fail("unterminated string");
            char c = text_[pos_++];
            if (c == '"') break;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos_ >= text_.size()) fail("unterminated escape");
            char e = text_[pos_++];
            switch (e) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: fail(std::string("unknown escape '\\") + e + "'");
            }
        }
        return out;
    }

    Int parse_int() {
        skip_space();
        std::size_t start = pos_;
        if (try_consume('-')) {}
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.empty() || digits == "-") fail("expected an integer");
        return Int(std::string(digits));
    }

    ValueList parse_fields(const std::vector<FieldDef>& defs, bool labeled) {
        ValueList values;
        for (const FieldDef& def : defs) {
            skip_space();
            if (labeled && try_consume(':')) {
                std::string label = bare_token();
                if (label != def.name) {
                    fail("expected attribute '" + def.name + "', got ':" +
                         label + "'");
                }
            }
            values.push_back(parse_field(def));
        }
        return values;
    }

    Value parse_field(const FieldDef& def) {
        if (!def.sequence) return parse_type(def.type_name);
        skip_space();
        expect('[');
        ValueList elems;
        while (true) {
            skip_space();
            if (try_consume(']')) break;
            elems.push_back(parse_type(def.type_name));
        }
        return Value::list(std::move(elems));
    }

    Value parse_type(std::string_view type_name) {
        skip_space();
        if (type_name == "int") return Value::integer(parse_int());
        if (type_name == "string") return Value::string(quoted_string());
        if (type_name == "identifier") {
            if (peek() == '"') return Value::identifier(quoted_string());
            return Value::identifier(bare_token());
        }
        const CheckedType& t = env_.type(type_name);
        expect('(');
        std::string head = bare_token();
        if (t.kind == TypeKind::Product) {
            if (head != "tuple") {
                fail("expected '(tuple ...' for product '" + t.name + "'");
            }
            ValueList fields = parse_fields(t.fields, false);
            skip_space();
            expect(')');
            return mk_product(env_, t.name, std::move(fields));
        }
        const ConstructorDef* ctor = nullptr;
        for (const ConstructorDef& c : t.constructors) {
            if (c.name == head) ctor = &c;
        }
        if (!ctor) {
            fail("'" + t.name + "' has no constructor '" + head + "'");
        }
        ValueList attributes = parse_fields(t.attributes, true);
        ValueList fields = parse_fields(ctor->fields, false);
        skip_space();
        expect(')');
        return mk_sum(env_, t.name, ctor->name, std::move(attributes),
                      std::move(fields));
    }

    const SchemaEnv& env_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string print_value(const SchemaEnv& env, std::string_view type_name,
                        const Value& v) {
    return Printer(env).print(type_name, v);
}

Value parse_value(const SchemaEnv& env, std::string_view type_name,
                  std::string_view text) {
    return TextParser(env, text).parse_one(type_name);
}

std::vector<Value> parse_values(const SchemaEnv& env,
                                std::string_view type_name,
                                std::string_view text) {
    return TextParser(env, text).parse_many(type_name);
}

}  // namespace asdl::text
