#include <asdl/xml_form.hpp>

#include <cctype>

namespace asdl::xml {

const std::string* Symbols::name_of(const std::string& field,
                                    std::int64_t code) const {
    auto it = by_field.find(field);
    if (it == by_field.end()) return nullptr;
    auto jt = it->second.find(code);
    return jt == it->second.end() ? nullptr : &jt->second;
}

bool Symbols::code_of(const std::string& field, std::string_view name,
                      std::int64_t& out) const {
    auto it = by_field.find(field);
    if (it == by_field.end()) return false;
    for (const auto& [code, sym] : it->second) {
        if (sym == name) {
            out = code;
            return true;
        }
    }
    return false;
}

namespace {

constexpr int kMaxDepth = 10000;

struct Elem {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Elem> children;
    std::string text;

    const std::string* attr(std::string_view key) const {
        for (const auto& [k, v] : attrs) {
            if (k == key) return &v;
        }
        return nullptr;
    }
};

void escape_into(std::string& out, std::string_view s, bool in_attribute) {
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        switch (c) {
        case '&': out += "&amp;"; continue;
        case '<': out += "&lt;"; continue;
        case '>': out += "&gt;"; continue;
        case '"':
            if (in_attribute) {
                out += "&quot;";
                continue;
            }
            break;
        default: break;
        }
        bool keep_raw = u >= 0x20 || (!in_attribute && (c == '\n' || c == '\t'));
        if (keep_raw) {
            out += c;
        } else {
            out += "&#" + std::to_string(u) + ";";
        }
    }
}

void serialize(const Elem& e, std::string& out, int indent) {
    out.append(indent * 2, ' ');
    out += '<';
    out += e.name;
    for (const auto& [k, v] : e.attrs) {
        out += ' ';
        out += k;
        out += "=\"";
        escape_into(out, v, true);
        out += '"';
    }
    if (e.children.empty() && e.text.empty()) {
        out += "/>";
        return;
    }
    out += '>';
    if (e.children.empty()) {
        escape_into(out, e.text, false);
    } else {
        for (const Elem& child : e.children) {
            out += '\n';
            serialize(child, out, indent + 1);
        }
        out += '\n';
        out.append(indent * 2, ' ');
    }
    out += "</";
    out += e.name;
    out += '>';
}

bool scalar_type(std::string_view type_name) {
    return type_name == "int" || type_name == "string" ||
           type_name == "identifier";
}

class Emitter {
public:
    Emitter(const SchemaEnv& env, const Symbols* symbols)
        : env_(env), symbols_(symbols) {}

    static Elem text_elem(std::string name, std::string text) {
        Elem e;
        e.name = std::move(name);
        e.text = std::move(text);
        return e;
    }

    Elem value_elem(std::string_view type_name, const Value& v) {
        if (type_name == "int") return text_elem("int", v.as_int().str());
        if (type_name == "string") return text_elem("string", v.as_string());
        if (type_name == "identifier") {
            return text_elem("id", std::string(v.as_identifier().view()));
        }
        const CheckedType& t = env_.type(type_name);
        if (t.kind == TypeKind::Product) {
            Elem e;
            e.name = t.name;
            append_fields(e, t.fields, v.fields());
            return e;
        }
        const ConstructorDef& ctor = env_.constructor(t.name, v.constructor());
        Elem e;
        e.name = ctor.name;
        for (std::size_t i = 0; i < t.attributes.size(); ++i) {
            const FieldDef& def = t.attributes[i];
            if (!def.sequence && scalar_type(def.type_name)) {
                e.attrs.emplace_back(def.name,
                                     scalar_text(def, v.attributes()[i]));
            } else {
                e.children.push_back(field_elem(def, v.attributes()[i]));
            }
        }
        append_fields(e, ctor.fields, v.fields());
        return e;
    }

private:
    std::string scalar_text(const FieldDef& def, const Value& v) {
        if (def.type_name == "int") {
            if (symbols_ && v.as_int() >= INT64_MIN && v.as_int() <= INT64_MAX) {
                auto code = static_cast<std::int64_t>(v.as_int());
                if (const std::string* sym = symbols_->name_of(def.name, code)) {
                    return *sym;
                }
            }
            return v.as_int().str();
        }
        if (def.type_name == "string") return v.as_string();
        return std::string(v.as_identifier().view());
    }

    void append_fields(Elem& e, const std::vector<FieldDef>& defs,
                       const ValueList& values) {
        for (std::size_t i = 0; i < defs.size(); ++i) {
            e.children.push_back(field_elem(defs[i], values[i]));
        }
    }

    Elem field_elem(const FieldDef& def, const Value& v) {
        Elem e;
        e.name = def.name;
        if (def.sequence) {
            for (const Value& item : v.elements()) {
                e.children.push_back(value_elem(def.type_name, item));
            }
            return e;
        }
        if (scalar_type(def.type_name)) {
            e.text = scalar_text(def, v);
            return e;
        }
        e.children.push_back(value_elem(def.type_name, v));
        return e;
    }

    const SchemaEnv& env_;
    const Symbols* symbols_;
};

class XmlParser {
public:
    explicit XmlParser(std::string_view text) : text_(text) {}

    Elem parse_document() {
        skip_misc();
        Elem root = element(0);
        skip_misc();
        if (pos_ < text_.size()) fail("trailing content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw XmlError("xml: offset " + std::to_string(pos_) + ": " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_).starts_with(prefix);
    }

    // Whitespace, the <?xml?> prolog, and comments.
    void skip_misc() {
        while (true) {
            skip_space();
            if (starts_with("<?")) {
                std::size_t end = text_.find("?>", pos_);
                if (end == std::string_view::npos) fail("unterminated '<?'");
                pos_ = end + 2;
            } else if (starts_with("<!--")) {
                std::size_t end = text_.find("-->", pos_);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 3;
            } else {
                return;
            }
        }
    }

    char take() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_++];
    }

    void expect(char c) {
        if (take() != c) {
            --pos_;
            fail(std::string("expected '") + c + "'");
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '-' || c == '.' || c == ':';
    }

    std::string name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') {
                out += raw[i++];
                continue;
            }
            std::size_t end = raw.find(';', i);
            if (end == std::string_view::npos) fail("unterminated entity");
            std::string_view ent = raw.substr(i + 1, end - i - 1);
            if (ent == "amp") {
                out += '&';
            } else if (ent == "lt") {
                out += '<';
            } else if (ent == "gt") {
                out += '>';
            } else if (ent == "quot") {
                out += '"';
            } else if (ent == "apos") {
                out += '\'';
            } else if (ent.starts_with("#")) {
                int base = 10;
                std::string_view digits = ent.substr(1);
                if (digits.starts_with("x") || digits.starts_with("X")) {
                    base = 16;
                    digits = digits.substr(1);
                }
                unsigned long code = 0;
                if (digits.empty()) fail("empty character reference");
                for (char c : digits) {
                    int d;
                    if (c >= '0' && c <= '9') {
                        d = c - '0';
                    } else if (base == 16 && std::isxdigit(static_cast<unsigned char>(c))) {
                        d = std::tolower(c) - 'a' + 10;
                    } else {
                        fail("bad character reference");
                    }
                    code = code * base + static_cast<unsigned long>(d);
                    if (code > 0x10FFFF) fail("character reference out of range");
                }
                if (code < 0x80) {
                    out += static_cast<char>(code);
                } else if (code < 0x800) {
                    out += static_cast<char>(0xC0 | (code >> 6));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                } else if (code < 0x10000) {
                    out += static_cast<char>(0xE0 | (code >> 12));
                    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                } else {
                    out += static_cast<char>(0xF0 | (code >> 18));
                    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                    out += static_cast<char>(0x80 | (code & 0x3F));
                }
            } else {
                fail("unknown entity '&" + std::string(ent) + ";'");
            }
            i = end + 1;
        }
        return out;
    }

    Elem element(int depth) {
        if (depth > kMaxDepth) fail("document nests too deeply");
        expect('<');
        Elem e;
        e.name = name();
        while (true) {
            skip_space();
            char c = take();
            if (c == '>') break;
            if (c == '/') {
                expect('>');
                return e;
            }
            --pos_;
            std::string key = name();
            skip_space();
            expect('=');
            skip_space();
            char quote = take();
            if (quote != '"' && quote != '\'') fail("expected a quoted value");
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != quote) ++pos_;
            if (pos_ >= text_.size()) fail("unterminated attribute value");
            e.attrs.emplace_back(
                key, decode_entities(text_.substr(start, pos_ - start)));
            ++pos_;
        }
        // Content: either child elements (whitespace and comments between
        // them) or character data.
        std::string raw_text;
        bool has_children = false;
        while (true) {
            if (pos_ >= text_.size()) fail("unterminated element <" + e.name + ">");
            if (starts_with("</")) break;
            if (starts_with("<!--")) {
                std::size_t end = text_.find("-->", pos_);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 3;
                continue;
            }
            if (text_[pos_] == '<') {
                e.children.push_back(element(depth + 1));
                has_children = true;
                continue;
            }
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '<') ++pos_;
            raw_text += text_.substr(start, pos_ - start);
        }
        pos_ += 2;  // "</"
        std::string close = name();
        if (close != e.name) {
            fail("mismatched closing tag </" + close + "> for <" + e.name +
                 ">");
        }
        skip_space();
        expect('>');
        if (has_children) {
            for (char c : raw_text) {
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    fail("element <" + e.name +
                         "> mixes text and child elements");
                }
            }
        } else {
            e.text = decode_entities(raw_text);
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Decoder {
public:
    Decoder(const SchemaEnv& env, const Symbols* symbols)
        : env_(env), symbols_(symbols) {}

    Value decode_value(std::string_view type_name, const Elem& e) {
        if (type_name == "int") {
            require_name(e, "int");
            return Value::integer(parse_int(e.text, nullptr));
        }
        if (type_name == "string") {
            require_name(e, "string");
            return Value::string(e.text);
        }
        if (type_name == "identifier") {
            require_name(e, "id");
            return Value::identifier(e.text);
        }
        const CheckedType& t = env_.type(type_name);
        if (t.kind == TypeKind::Product) {
            require_name(e, t.name);
            if (e.children.size() != t.fields.size()) {
                throw XmlError("product <" + t.name + "> expects " +
                               std::to_string(t.fields.size()) + " fields, got " +
                               std::to_string(e.children.size()));
            }
            ValueList fields;
            for (std::size_t i = 0; i < t.fields.size(); ++i) {
                fields.push_back(decode_field(t.fields[i], e.children[i]));
            }
            return mk_product(env_, t.name, std::move(fields));
        }
        const ConstructorDef* ctor = nullptr;
        for (const ConstructorDef& c : t.constructors) {
            if (c.name == e.name) ctor = &c;
        }
        if (!ctor) {
            throw XmlError("'" + t.name + "' has no constructor <" + e.name +
                           ">");
        }
        ValueList attributes;
        std::size_t child = 0;
        for (const FieldDef& def : t.attributes) {
            if (!def.sequence && scalar_type(def.type_name)) {
                const std::string* raw = e.attr(def.name);
                if (!raw) {
                    throw XmlError("<" + e.name + "> is missing attribute '" +
                                   def.name + "'");
                }
                attributes.push_back(scalar_from_text(def, *raw));
            } else {
                if (child >= e.children.size()) {
                    throw XmlError("<" + e.name + "> is missing attribute '" +
                                   def.name + "'");
                }
                attributes.push_back(decode_field(def, e.children[child++]));
            }
        }
        if (e.children.size() - child != ctor->fields.size()) {
            throw XmlError("<" + e.name + "> expects " +
                           std::to_string(ctor->fields.size()) +
                           " field element(s), got " +
                           std::to_string(e.children.size() - child));
        }
        ValueList fields;
        for (const FieldDef& def : ctor->fields) {
            fields.push_back(decode_field(def, e.children[child++]));
        }
        return mk_sum(env_, t.name, ctor->name, std::move(attributes),
                      std::move(fields));
    }

private:
    void require_name(const Elem& e, std::string_view expected) {
        if (e.name != expected) {
            throw XmlError("expected <" + std::string(expected) + ">, got <" +
                           e.name + ">");
        }
    }

    Int parse_int(std::string_view raw, const FieldDef* def) {
        // Trim surrounding whitespace; numeric content only.
        std::size_t b = 0;
        std::size_t e = raw.size();
        while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
        std::string_view body = raw.substr(b, e - b);
        if (def && symbols_) {
            std::int64_t code = 0;
            if (symbols_->code_of(def->name, body, code)) return Int(code);
        }
        bool ok = !body.empty();
        for (std::size_t i = 0; i < body.size(); ++i) {
            char c = body[i];
            if (i == 0 && c == '-' && body.size() > 1) continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
        }
        if (!ok) {
            throw XmlError("bad integer '" + std::string(raw) + "'");
        }
        return Int(std::string(body));
    }

    Value scalar_from_text(const FieldDef& def, const std::string& raw) {
        if (def.type_name == "int") return Value::integer(parse_int(raw, &def));
        if (def.type_name == "string") return Value::string(raw);
        return Value::identifier(raw);
    }

    Value decode_field(const FieldDef& def, const Elem& e) {
        if (e.name != def.name) {
            throw XmlError("expected field <" + def.name + ">, got <" +
                           e.name + ">");
        }
        if (def.sequence) {
            ValueList elems;
            for (const Elem& child : e.children) {
                elems.push_back(decode_value(def.type_name, child));
            }
            return Value::list(std::move(elems));
        }
        if (scalar_type(def.type_name)) {
            if (!e.children.empty()) {
                throw XmlError("field <" + def.name +
                               "> should hold text content");
            }
            return scalar_from_text(def, e.text);
        }
        if (e.children.size() != 1) {
            throw XmlError("field <" + def.name +
                           "> should hold exactly one element");
        }
        return decode_value(def.type_name, e.children.front());
    }

    const SchemaEnv& env_;
    const Symbols* symbols_;
};

}  // namespace

std::string write_value(const SchemaEnv& env, std::string_view type_name,
                        const Value& v, const Symbols* symbols) {
    Elem root = Emitter(env, symbols).value_elem(type_name, v);
    std::string out;
    serialize(root, out, 0);
    return out;
}

Value read_value(const SchemaEnv& env, std::string_view type_name,
                 std::string_view text, const Symbols* symbols) {
    Elem root = XmlParser(text).parse_document();
    return Decoder(env, symbols).decode_value(type_name, root);
}

std::string write_file(const SchemaEnv& env, std::string_view type_name,
                       std::span<const Value> instances,
                       const Symbols* symbols) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (instances.size() == 1) {
        out += write_value(env, type_name, instances.front(), symbols);
        out += '\n';
        return out;
    }
    Emitter emitter(env, symbols);
    Elem root;
    root.name = "pickle";
    for (const Value& v : instances) {
        root.children.push_back(emitter.value_elem(type_name, v));
    }
    serialize(root, out, 0);
    out += '\n';
    return out;
}

std::vector<Value> read_file(const SchemaEnv& env, std::string_view type_name,
                             std::string_view text, const Symbols* symbols) {
    Elem root = XmlParser(text).parse_document();
    Decoder decoder(env, symbols);
    std::vector<Value> out;
    if (root.name == "pickle" && type_name != "pickle") {
        for (const Elem& child : root.children) {
            out.push_back(decoder.decode_value(type_name, child));
        }
        return out;
    }
    out.push_back(decoder.decode_value(type_name, root));
    return out;
}

}  // namespace asdl::xml
