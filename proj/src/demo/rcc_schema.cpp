#include <minircc/rcc_schema.hpp>

#include <asdl/parser.hpp>
#include <minircc/ops.hpp>

namespace minircc {

namespace {

// Keep in sync with fixtures/rcc.asdl; a test checks they parse equal.
constexpr std::string_view kGrammar = R"(-- The rcc code-generation grammar: items carry uid definitions for
-- multiply-referenced symbols and types, interfaces encode the calls a
-- front end makes, and nodes represent executable code.
module rcc {

program = (int nuids, int nlabels, item* items, interface* interfaces,
           int argc, string* argv)

item    = Symbol(symbol symbol)
        | Type(type type)
          attributes(int uid)

symbol  = (identifier id, int type, int scope, int sclass,
           int ref, int flags)

field   = (identifier id, int type, int offset, int bitsize, int lsb)

enum    = (identifier id, int value)

type    = INT
        | UNSIGNED
        | FLOAT
        | VOID
        | POINTER(int type)
        | ENUM(identifier tag, enum* ids)
        | STRUCT(identifier tag, field* fields)
        | UNION(identifier tag, field* fields)
        | ARRAY(int type)
        | FUNCTION(int type, int* formals)
        | CONST(int type)
        | VOLATILE(int type)
          attributes(int size, int align)

real    = (int msb, int lsb)

interface = Export(int p)
          | Import(int p)
          | Global(int p, int seg)
          | Local(int uid, symbol p)
          | Address(int uid, symbol q, int p, int n)
          | Segment(int seg)
          | Defaddress(int p)
          | Deflabel(int label)
          | Defconst(int suffix, int size, int value)
          | Defconstf(int size, real value)
          | Defstring(string s)
          | Space(int n)
          | Function(int f, int* caller, int* callee,
                     int ncalls, interface* codelist)
          | Blockbeg
          | Blockend
          | Forest(node* nodes)

node    = CNST(int value)
        | CNSTF(real value)
        | ARG(node left, int len, int align)
        | ASGN(node left, node right, int len, int align)
        | CVT(int op, node left, int fromsize)
        | CALL(node left, int type)
        | CALLB(node left, node right, int type)
        | RET
        | ADDRG(int uid)
        | ADDRL(int uid)
        | ADDRF(int uid)
        | Unary(int op, node left)
        | Binary(int op, node left, node right)
        | Compare(int op, node left, node right, int label)
        | LABEL(int label)
        | BRANCH(int label)
        | CSE(int uid, node node)
          attributes(int suffix, int size)
}
)";

}  // namespace

std::string_view rcc_grammar_text() { return kGrammar; }

const asdl::SchemaEnv& rcc_env() {
    static const asdl::SchemaEnv env = asdl::check(asdl::parse_spec(kGrammar));
    return env;
}

const asdl::xml::Symbols& suffix_symbols() {
    static const asdl::xml::Symbols symbols = [] {
        asdl::xml::Symbols s;
        std::map<std::int64_t, std::string> table;
        for (int i = 0; i < kSuffixCount; ++i) {
            table[i] = std::string(1, suffix_letter(static_cast<Suffix>(i)));
        }
        s.by_field["suffix"] = std::move(table);
        return s;
    }();
    return symbols;
}

}  // namespace minircc
