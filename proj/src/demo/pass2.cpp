#include <minircc/pass2.hpp>

#include <cctype>
#include <cstdio>
#include <map>

#include <asdl/pickle.hpp>
#include <minircc/ops.hpp>
#include <minircc/rcc_schema.hpp>

namespace minircc {

using asdl::Value;

DanglingUidError::DanglingUidError(long long uid)
    : std::runtime_error("dangling uid " + std::to_string(uid) +
                         ": no item defines it"),
      uid_(uid) {}

namespace {

long long ival(const Value& v) { return v.as_int().convert_to<long long>(); }

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (u < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\x%02x", u);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

char suffix_char(const Value& node) {
    long long code = ival(node.attributes()[0]);
    if (code < 0 || code >= kSuffixCount) {
        throw std::runtime_error("node suffix " + std::to_string(code) +
                                 " is out of range");
    }
    return static_cast<char>(
        std::tolower(suffix_letter(static_cast<Suffix>(code))));
}

std::string op_text(long long code) {
    if (code < 1 || code > kOpCount) {
        throw std::runtime_error("operator code " + std::to_string(code) +
                                 " is out of range");
    }
    return op_lower(static_cast<Op>(code));
}

std::string seg_text(long long seg) {
    switch (seg) {
    case 1: return "code";
    case 2: return "bss";
    case 3: return "data";
    case 4: return "lit";
    default: return std::to_string(seg);
    }
}

/// Rebuilds the uid tables from the item list, then replays the interface
/// list in order.
class Emitter {
public:
    explicit Emitter(const Value& program) : program_(program) {}

    std::string run() {
        const asdl::ValueList& fields = program_.fields();
        build_uid_maps(fields[2].elements());

        // progbeg gets the recorded command line.
        out_ += "progbeg";
        for (const Value& arg : fields[5].elements()) {
            out_ += ' ';
            out_ += arg.as_string();
        }
        out_ += '\n';
        for (const Value& call : fields[3].elements()) {
            emit_interface(call);
        }
        out_ += "progend\n";
        return std::move(out_);
    }

private:
    void build_uid_maps(const asdl::ValueList& items) {
        for (const Value& item : items) {
            long long uid = ival(item.attributes()[0]);
            if (items_.count(uid)) {
                throw std::runtime_error("uid " + std::to_string(uid) +
                                         " is defined by more than one item");
            }
            items_.emplace(uid, item);
        }
        // Resolve every reference items make among themselves.
        for (const auto& [uid, item] : items_) {
            if (item.constructor() == "Symbol") {
                check_symbol(item.fields()[0]);
            } else {
                check_type_refs(item.fields()[0]);
            }
        }
    }

    const Value& item_of(long long uid) {
        auto it = items_.find(uid);
        if (it == items_.end()) throw DanglingUidError(uid);
        return it->second;
    }

    void check_symbol(const Value& symbol) { resolve_type(ival(symbol.fields()[1])); }

    void resolve_type(long long uid) {
        const Value& item = item_of(uid);
        if (item.constructor() != "Type") {
            throw std::runtime_error("uid " + std::to_string(uid) +
                                     " names a symbol where a type is "
                                     "expected");
        }
    }

    void check_type_refs(const Value& type) {
        const std::string& ctor = type.constructor();
        const asdl::ValueList& f = type.fields();
        if (ctor == "POINTER" || ctor == "ARRAY" || ctor == "CONST" ||
            ctor == "VOLATILE") {
            resolve_type(ival(f[0]));
        } else if (ctor == "FUNCTION") {
            resolve_type(ival(f[0]));
            for (const Value& formal : f[1].elements()) {
                resolve_type(ival(formal));
            }
        } else if (ctor == "STRUCT" || ctor == "UNION") {
            for (const Value& field : f[1].elements()) {
                resolve_type(ival(field.fields()[1]));
            }
        }
    }

    const std::string& name_of(long long uid) {
        const Value& item = item_of(uid);
        if (item.constructor() != "Symbol") {
            throw std::runtime_error("uid " + std::to_string(uid) +
                                     " names a type where a symbol is "
                                     "expected");
        }
        return item.fields()[0].fields()[0].as_identifier().str();
    }

    void line(const std::string& text) {
        out_ += text;
        out_ += '\n';
    }

    std::string names_of(const Value& uid_list) {
        std::string out;
        for (const Value& uid : uid_list.elements()) {
            if (!out.empty()) out += ' ';
            out += name_of(ival(uid));
        }
        return out;
    }

    void emit_interface(const Value& call) {
        const std::string& ctor = call.constructor();
        const asdl::ValueList& f = call.fields();
        if (ctor == "Export") {
            line("export " + name_of(ival(f[0])));
        } else if (ctor == "Import") {
            line("import " + name_of(ival(f[0])));
        } else if (ctor == "Global") {
            line("global " + name_of(ival(f[0])) + " seg=" +
                 seg_text(ival(f[1])));
        } else if (ctor == "Local") {
            line("local " + name_of(ival(f[0])));
        } else if (ctor == "Address") {
            line("address " + name_of(ival(f[0])) + " = " +
                 name_of(ival(f[2])) + "+" + std::to_string(ival(f[3])));
        } else if (ctor == "Segment") {
            line("segment " + seg_text(ival(f[0])));
        } else if (ctor == "Defaddress") {
            line("defaddress " + name_of(ival(f[0])));
        } else if (ctor == "Deflabel") {
            line("deflabel L" + std::to_string(ival(f[0])));
        } else if (ctor == "Defconst") {
            long long suffix = ival(f[0]);
            if (suffix < 0 || suffix >= kSuffixCount) {
                throw std::runtime_error("Defconst suffix out of range");
            }
            char s = static_cast<char>(
                std::tolower(suffix_letter(static_cast<Suffix>(suffix))));
            line(std::string("defconst.") + s + std::to_string(ival(f[1])) +
                 " " + std::to_string(ival(f[2])));
        } else if (ctor == "Defconstf") {
            const asdl::ValueList& real = f[1].fields();
            line("defconstf." + std::to_string(ival(f[0])) + " " +
                 std::to_string(ival(real[0])) + " " +
                 std::to_string(ival(real[1])));
        } else if (ctor == "Defstring") {
            line("defstring " + quoted(f[0].as_string()));
        } else if (ctor == "Space") {
            line("space " + std::to_string(ival(f[0])));
        } else if (ctor == "Function") {
            line("function " + name_of(ival(f[0])) + " ncalls=" +
                 std::to_string(ival(f[3])) + " caller=[" + names_of(f[1]) +
                 "] callee=[" + names_of(f[2]) + "]");
            for (const Value& entry : f[4].elements()) {
                emit_interface(entry);
            }
        } else if (ctor == "Blockbeg") {
            line("blockbeg");
        } else if (ctor == "Blockend") {
            line("blockend");
        } else if (ctor == "Forest") {
            for (const Value& node : f[0].elements()) {
                emit_node(node);
            }
        } else {
            throw std::logic_error("unhandled interface constructor " + ctor);
        }
    }

    std::string sized(const Value& node, const std::string& op) {
        return op + "." + suffix_char(node) +
               std::to_string(ival(node.attributes()[1]));
    }

    // One line per node, post-order: operands first.
    void emit_node(const Value& node) {
        const std::string& ctor = node.constructor();
        const asdl::ValueList& f = node.fields();
        if (ctor == "CNST") {
            line(sized(node, "cnst") + " " + std::to_string(ival(f[0])));
        } else if (ctor == "CNSTF") {
            const asdl::ValueList& real = f[0].fields();
            line(sized(node, "cnstf") + " " + std::to_string(ival(real[0])) +
                 " " + std::to_string(ival(real[1])));
        } else if (ctor == "ARG") {
            emit_node(f[0]);
            line(sized(node, "arg"));
        } else if (ctor == "ASGN") {
            emit_node(f[0]);
            emit_node(f[1]);
            line(sized(node, "asgn"));
        } else if (ctor == "CVT") {
            emit_node(f[1]);
            line(sized(node, op_text(ival(f[0]))) + " " +
                 std::to_string(ival(f[2])));
        } else if (ctor == "CALL") {
            emit_node(f[0]);
            line(sized(node, "call"));
        } else if (ctor == "CALLB") {
            emit_node(f[0]);
            emit_node(f[1]);
            line(sized(node, "callb"));
        } else if (ctor == "RET") {
            line(sized(node, "ret"));
        } else if (ctor == "ADDRG" || ctor == "ADDRL" || ctor == "ADDRF") {
            std::string op = ctor == "ADDRG" ? "addrg"
                             : ctor == "ADDRL" ? "addrl"
                                               : "addrf";
            line(op + " " + name_of(ival(f[0])));
        } else if (ctor == "Unary") {
            emit_node(f[1]);
            line(sized(node, op_text(ival(f[0]))));
        } else if (ctor == "Binary") {
            emit_node(f[1]);
            emit_node(f[2]);
            line(sized(node, op_text(ival(f[0]))));
        } else if (ctor == "Compare") {
            emit_node(f[1]);
            emit_node(f[2]);
            line(sized(node, op_text(ival(f[0]))) + " L" +
                 std::to_string(ival(f[3])));
        } else if (ctor == "LABEL") {
            line("label L" + std::to_string(ival(f[0])));
        } else if (ctor == "BRANCH") {
            line("branch L" + std::to_string(ival(f[0])));
        } else if (ctor == "CSE") {
            emit_node(f[1]);
            line(sized(node, "cse") + " " + name_of(ival(f[0])));
        } else {
            throw std::logic_error("unhandled node constructor " + ctor);
        }
    }

    const Value& program_;
    std::map<long long, Value> items_;
    std::string out_;
};

}  // namespace

std::string emit_assembly(const Value& program) {
    return Emitter(program).run();
}

std::string pass2(std::span<const std::uint8_t> pickle_bytes) {
    Value program =
        asdl::pickle::read_first(rcc_env(), "program", pickle_bytes);
    return emit_assembly(program);
}

namespace {

/// Collects definitions and references, then reports dangling references,
/// duplicate definitions, kind confusion, and caller/callee mismatches.
class Lint {
public:
    explicit Lint(const Value& program) : program_(program) {}

    std::vector<LintIssue> run() {
        const asdl::ValueList& fields = program_.fields();
        for (const Value& item : fields[2].elements()) {
            long long uid = ival(item.attributes()[0]);
            if (!items_.emplace(uid, item).second) {
                add("uid " + std::to_string(uid) +
                    " is defined by more than one item");
            }
        }
        for (const auto& [uid, item] : items_) {
            if (item.constructor() == "Symbol") {
                symbol_refs(item.fields()[0]);
            } else {
                type_refs(item.fields()[0]);
            }
        }
        for (const Value& call : fields[3].elements()) {
            interface_refs(call);
        }
        return std::move(issues_);
    }

private:
    void add(std::string message) { issues_.push_back({std::move(message)}); }

    void require(long long uid, const char* kind) {
        auto it = items_.find(uid);
        if (it == items_.end()) {
            add("dangling uid " + std::to_string(uid) + ": no item defines "
                "it");
            return;
        }
        const std::string& ctor = it->second.constructor();
        if (kind == std::string_view("symbol") && ctor != "Symbol") {
            add("uid " + std::to_string(uid) +
                " names a type where a symbol is expected");
        }
        if (kind == std::string_view("type") && ctor != "Type") {
            add("uid " + std::to_string(uid) +
                " names a symbol where a type is expected");
        }
    }

    void symbol_refs(const Value& symbol) {
        require(ival(symbol.fields()[1]), "type");
    }

    void type_refs(const Value& type) {
        const std::string& ctor = type.constructor();
        const asdl::ValueList& f = type.fields();
        if (ctor == "POINTER" || ctor == "ARRAY" || ctor == "CONST" ||
            ctor == "VOLATILE") {
            require(ival(f[0]), "type");
        } else if (ctor == "FUNCTION") {
            require(ival(f[0]), "type");
            for (const Value& formal : f[1].elements()) {
                require(ival(formal), "type");
            }
        } else if (ctor == "STRUCT" || ctor == "UNION") {
            for (const Value& field : f[1].elements()) {
                require(ival(field.fields()[1]), "type");
            }
        }
    }

    std::string name_or_empty(long long uid) {
        auto it = items_.find(uid);
        if (it == items_.end() || it->second.constructor() != "Symbol") {
            return {};
        }
        return it->second.fields()[0].fields()[0].as_identifier().str();
    }

    void interface_refs(const Value& call) {
        const std::string& ctor = call.constructor();
        const asdl::ValueList& f = call.fields();
        if (ctor == "Export" || ctor == "Import" || ctor == "Defaddress") {
            require(ival(f[0]), "symbol");
        } else if (ctor == "Global") {
            require(ival(f[0]), "symbol");
        } else if (ctor == "Local") {
            require(ival(f[0]), "symbol");
            symbol_refs(f[1]);
        } else if (ctor == "Address") {
            require(ival(f[0]), "symbol");
            symbol_refs(f[1]);
            require(ival(f[2]), "symbol");
        } else if (ctor == "Function") {
            require(ival(f[0]), "symbol");
            const asdl::ValueList& caller = f[1].elements();
            const asdl::ValueList& callee = f[2].elements();
            for (const Value& uid : caller) require(ival(uid), "symbol");
            for (const Value& uid : callee) require(ival(uid), "symbol");
            if (caller.size() != callee.size()) {
                add("Function caller/callee lists differ in length");
            } else {
                for (std::size_t i = 0; i < caller.size(); ++i) {
                    std::string a = name_or_empty(ival(caller[i]));
                    std::string b = name_or_empty(ival(callee[i]));
                    if (a != b) {
                        add("caller/callee name mismatch at position " +
                            std::to_string(i) + ": '" + a + "' vs '" + b +
                            "'");
                    }
                }
            }
            for (const Value& entry : f[4].elements()) {
                interface_refs(entry);
            }
        } else if (ctor == "Forest") {
            for (const Value& node : f[0].elements()) {
                node_refs(node);
            }
        }
    }

    void node_refs(const Value& node) {
        const std::string& ctor = node.constructor();
        const asdl::ValueList& f = node.fields();
        if (ctor == "ADDRG" || ctor == "ADDRL" || ctor == "ADDRF") {
            require(ival(f[0]), "symbol");
        } else if (ctor == "CSE") {
            require(ival(f[0]), "symbol");
            node_refs(f[1]);
        } else if (ctor == "CALL") {
            node_refs(f[0]);
            require(ival(f[1]), "type");
        } else if (ctor == "CALLB") {
            node_refs(f[0]);
            node_refs(f[1]);
            require(ival(f[2]), "type");
        } else if (ctor == "ARG" || ctor == "Unary") {
            node_refs(ctor == "ARG" ? f[0] : f[1]);
        } else if (ctor == "ASGN") {
            node_refs(f[0]);
            node_refs(f[1]);
        } else if (ctor == "CVT") {
            node_refs(f[1]);
        } else if (ctor == "Binary" || ctor == "Compare") {
            node_refs(f[1]);
            node_refs(f[2]);
        }
    }

    const Value& program_;
    std::map<long long, Value> items_;
    std::vector<LintIssue> issues_;
};

}  // namespace

std::vector<LintIssue> lint_uids(const Value& program) {
    return Lint(program).run();
}

}  // namespace minircc
