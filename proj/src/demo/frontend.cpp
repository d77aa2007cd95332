#include <minircc/frontend.hpp>

#include <cctype>
#include <map>
#include <memory>
#include <optional>

#include <asdl/pickle.hpp>
#include <minircc/objects.hpp>
#include <minircc/ops.hpp>
#include <minircc/pass2.hpp>
#include <minircc/rcc_schema.hpp>
#include <minircc/uid_table.hpp>

namespace minircc {

using asdl::Value;
using asdl::ValueList;

FrontendError::FrontendError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------
// Mini language: `int x;` and `char *p;` declarations; assignments to x,
// *p, and *p++; print(expr); integer expressions over + - * /.

struct Tok {
    enum Kind {
        Ident, Number, KwInt, KwChar, KwPrint,
        Star, Plus, Minus, Slash, PlusPlus,
        LParen, RParen, Semi, Assign, End,
    };
    Kind kind;
    std::string text;
    long long num = 0;
    int line = 1;
    int col = 1;
};

class MiniLexer {
public:
    explicit MiniLexer(std::string_view src) : src_(src) { next(); }

    const Tok& peek() const { return tok_; }

    Tok take() {
        Tok t = tok_;
        next();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw FrontendError(line_, col_, message);
    }

    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void next() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
                while (i_ < src_.size() && src_[i_] != '\n') advance();
                continue;
            }
            break;
        }
        tok_ = Tok{};
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= src_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                    src_[i_] == '_')) {
                advance();
            }
            tok_.text = std::string(src_.substr(start, i_ - start));
            if (tok_.text == "int") {
                tok_.kind = Tok::KwInt;
            } else if (tok_.text == "char") {
                tok_.kind = Tok::KwChar;
            } else if (tok_.text == "print") {
                tok_.kind = Tok::KwPrint;
            } else {
                tok_.kind = Tok::Ident;
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long value = 0;
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                value = value * 10 + (src_[i_] - '0');
                if (value > 0x7FFFFFFF) fail("integer literal too large");
                advance();
            }
            tok_.kind = Tok::Number;
            tok_.num = value;
            tok_.text = std::string(src_.substr(start, i_ - start));
            return;
        }
        advance();
        switch (c) {
        case '*': tok_.kind = Tok::Star; return;
        case '-': tok_.kind = Tok::Minus; return;
        case '/': tok_.kind = Tok::Slash; return;
        case '(': tok_.kind = Tok::LParen; return;
        case ')': tok_.kind = Tok::RParen; return;
        case ';': tok_.kind = Tok::Semi; return;
        case '=': tok_.kind = Tok::Assign; return;
        case '+':
            if (i_ < src_.size() && src_[i_] == '+') {
                advance();
                tok_.kind = Tok::PlusPlus;
            } else {
                tok_.kind = Tok::Plus;
            }
            return;
        default:
            throw FrontendError(tok_.line, tok_.col,
                                std::string("unexpected character '") + c +
                                    "'");
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    Tok tok_;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class K { Lit, Var, Deref, Binary };
    K k = K::Lit;
    long long lit = 0;
    std::string var;        // Var and Deref
    bool post_inc = false;  // Deref
    char op = 0;            // Binary: + - * /
    ExprPtr lhs, rhs;
    int line = 1, col = 1;
};

struct Stmt {
    enum class K { AssignVar, AssignDeref, Print };
    K k = K::Print;
    std::string target;
    bool post_inc = false;  // AssignDeref
    ExprPtr value;
    int line = 1, col = 1;
};

struct MiniItem {
    bool is_decl = false;
    // declarations
    std::string name;
    bool pointer = false;
    int line = 1, col = 1;
    // statements
    std::optional<Stmt> stmt;
};

class MiniParser {
public:
    explicit MiniParser(std::string_view src) : lex_(src) {}

    std::vector<MiniItem> parse() {
        std::vector<MiniItem> items;
        while (lex_.peek().kind != Tok::End) {
            items.push_back(item());
        }
        return items;
    }

private:
    [[noreturn]] void fail(const Tok& at, const std::string& message) {
        throw FrontendError(at.line, at.col, message);
    }

    Tok expect(Tok::Kind kind, const char* what) {
        if (lex_.peek().kind != kind) {
            fail(lex_.peek(), std::string("expected ") + what);
        }
        return lex_.take();
    }

    MiniItem item() {
        const Tok& t = lex_.peek();
        if (t.kind == Tok::KwInt || t.kind == Tok::KwChar) {
            return declaration();
        }
        MiniItem item;
        item.stmt = statement();
        item.line = item.stmt->line;
        item.col = item.stmt->col;
        return item;
    }

    MiniItem declaration() {
        MiniItem item;
        item.is_decl = true;
        Tok kw = lex_.take();
        item.line = kw.line;
        item.col = kw.col;
        if (kw.kind == Tok::KwChar) {
            expect(Tok::Star, "'*' (only 'char *name;' pointers)");
            item.pointer = true;
        }
        item.name = expect(Tok::Ident, "a variable name").text;
        expect(Tok::Semi, "';'");
        return item;
    }

    Stmt statement() {
        Stmt s;
        const Tok& t = lex_.peek();
        s.line = t.line;
        s.col = t.col;
        if (t.kind == Tok::KwPrint) {
            lex_.take();
            expect(Tok::LParen, "'('");
            s.k = Stmt::K::Print;
            s.value = expression();
            expect(Tok::RParen, "')'");
            expect(Tok::Semi, "';'");
            return s;
        }
        if (t.kind == Tok::Star) {
            lex_.take();
            s.k = Stmt::K::AssignDeref;
            s.target = expect(Tok::Ident, "a pointer variable").text;
            if (lex_.peek().kind == Tok::PlusPlus) {
                lex_.take();
                s.post_inc = true;
            }
            expect(Tok::Assign, "'='");
            s.value = expression();
            expect(Tok::Semi, "';'");
            return s;
        }
        if (t.kind == Tok::Ident) {
            s.k = Stmt::K::AssignVar;
            s.target = lex_.take().text;
            expect(Tok::Assign, "'='");
            s.value = expression();
            expect(Tok::Semi, "';'");
            return s;
        }
        fail(t, "expected a declaration or statement");
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (lex_.peek().kind == Tok::Plus ||
               lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take();
            auto bin = std::make_unique<Expr>();
            bin->k = Expr::K::Binary;
            bin->op = op.kind == Tok::Plus ? '+' : '-';
            bin->line = op.line;
            bin->col = op.col;
            bin->lhs = std::move(e);
            bin->rhs = term();
            e = std::move(bin);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.peek().kind == Tok::Star ||
               lex_.peek().kind == Tok::Slash) {
            Tok op = lex_.take();
            auto bin = std::make_unique<Expr>();
            bin->k = Expr::K::Binary;
            bin->op = op.kind == Tok::Star ? '*' : '/';
            bin->line = op.line;
            bin->col = op.col;
            bin->lhs = std::move(e);
            bin->rhs = factor();
            e = std::move(bin);
        }
        return e;
    }

    ExprPtr factor() {
        const Tok& t = lex_.peek();
        auto e = std::make_unique<Expr>();
        e->line = t.line;
        e->col = t.col;
        if (t.kind == Tok::Number) {
            e->k = Expr::K::Lit;
            e->lit = lex_.take().num;
            return e;
        }
        if (t.kind == Tok::Ident) {
            e->k = Expr::K::Var;
            e->var = lex_.take().text;
            return e;
        }
        if (t.kind == Tok::Star) {
            lex_.take();
            e->k = Expr::K::Deref;
            e->var = expect(Tok::Ident, "a pointer variable").text;
            if (lex_.peek().kind == Tok::PlusPlus) {
                lex_.take();
                e->post_inc = true;
            }
            return e;
        }
        if (t.kind == Tok::LParen) {
            lex_.take();
            ExprPtr inner = expression();
            expect(Tok::RParen, "')'");
            return inner;
        }
        fail(t, "expected an expression");
    }

    MiniLexer lex_;
};

// ---------------------------------------------------------------------
// Lowering to the rcc value model.

class Compiler {
public:
    explicit Compiler(const Metrics& metrics)
        : env_(rcc_env()), types_(metrics), uids_(env_) {}

    Value run(const std::vector<MiniItem>& items) {
        // Interning order is fixed: the predefined basic types, then the
        // synthetic main, then print when used, then per-item objects.
        uids_.intern_type(types_.int_type());
        uids_.intern_type(types_.char_type());

        int print_count = 0;
        for (const MiniItem& item : items) {
            if (item.is_decl) continue;
            const Stmt& s = *item.stmt;
            if (s.k == Stmt::K::Print) {
                ++print_count;
            } else {
                ++reads_total_[s.target];
            }
            count_reads(*s.value);
        }

        if (!items.empty()) {
            main_ = std::make_shared<Symbol>();
            main_->id = "main";
            main_->type = make_function(types_.int_type(), {});
            main_->scope = Scope::Global;
            main_->sclass = Sclass::Extern;
            main_->ref = 1;
            uids_.intern_symbol(main_);
        }
        if (print_count > 0) {
            print_ = std::make_shared<Symbol>();
            print_->id = "print";
            print_->type =
                make_function(types_.void_type(), {types_.int_type()});
            print_->scope = Scope::Global;
            print_->sclass = Sclass::Extern;
            print_->ref = print_count;
            uids_.intern_symbol(print_);
        }

        ValueList codelist;
        codelist.push_back(iface("Blockbeg", {}));
        for (const MiniItem& item : items) {
            if (item.is_decl) {
                declare(item, codelist);
            } else {
                lower_statement(*item.stmt, codelist);
            }
        }
        codelist.push_back(iface("Blockend", {}));

        ValueList interfaces;
        int nlabels = 0;
        if (!items.empty()) {
            // Function epilogue: a single LABEL in its own forest.
            ++nlabels;
            codelist.push_back(iface(
                "Forest", {Value::list({node("LABEL", Suffix::V, 0,
                                             {Value::integer(nlabels)})})}));
            if (print_) {
                interfaces.push_back(
                    iface("Import", {Value::integer(uid_of(print_))}));
            }
            interfaces.push_back(
                iface("Export", {Value::integer(uid_of(main_))}));
            interfaces.push_back(iface(
                "Function",
                {Value::integer(uid_of(main_)), Value::list({}),
                 Value::list({}), Value::integer(ncalls_),
                 Value::list(std::move(codelist))}));
        }

        const Metrics& m = types_.metrics();
        ValueList argv = {Value::string("minircc"), Value::string("--metrics"),
                          Value::string(std::to_string(m.pointer_m.size * 8))};
        return asdl::mk_product(
            env_, "program",
            {Value::integer(uids_.count()), Value::integer(nlabels),
             Value::list(uids_.items()), Value::list(std::move(interfaces)),
             Value::integer(static_cast<long long>(argv.size())),
             Value::list(std::move(argv))});
    }

private:
    Value iface(const char* ctor, ValueList fields) {
        return asdl::mk_sum(env_, "interface", ctor, {}, std::move(fields));
    }

    Value node(const char* ctor, Suffix suffix, int size, ValueList fields) {
        return asdl::mk_sum(env_, "node", ctor,
                            {Value::integer(static_cast<int>(suffix)),
                             Value::integer(size)},
                            std::move(fields));
    }

    int uid_of(const SymbolRef& s) { return uids_.intern_symbol(s); }

    const SymbolRef& lookup(const std::string& name, int line, int col) {
        auto it = vars_.find(name);
        if (it == vars_.end()) {
            throw FrontendError(line, col, "undeclared name '" + name + "'");
        }
        return it->second;
    }

    static bool is_pointer(const SymbolRef& s) {
        return s->type->op == TypeOp::Pointer;
    }

    void declare(const MiniItem& item, ValueList& codelist) {
        if (vars_.count(item.name)) {
            throw FrontendError(item.line, item.col,
                                "redeclaration of '" + item.name + "'");
        }
        auto sym = std::make_shared<Symbol>();
        sym->id = item.name;
        sym->type = item.pointer ? types_.pointer_to(types_.char_type())
                                 : types_.int_type();
        sym->scope = Scope::Local;
        sym->sclass = Sclass::Auto;
        sym->ref = reads_total_[item.name];
        vars_.emplace(item.name, sym);
        codelist.push_back(local_call(sym));
    }

    Value local_call(const SymbolRef& sym) {
        int uid = uids_.intern_symbol(sym);
        return iface("Local",
                     {Value::integer(uid), uids_.symbol_value(*sym)});
    }

    // Reads of one variable per statement; two or more trigger a CSE
    // temporary. Mentions also feed the symbols' ref counts.
    void count_reads(const Expr& e) {
        switch (e.k) {
        case Expr::K::Lit:
            return;
        case Expr::K::Var:
        case Expr::K::Deref:
            ++reads_total_[e.var];
            return;
        case Expr::K::Binary:
            count_reads(*e.lhs);
            count_reads(*e.rhs);
            return;
        }
    }

    void count_statement_reads(const Stmt& s,
                               std::map<std::string, int>& reads) {
        struct Walk {
            std::map<std::string, int>& reads;
            void operator()(const Expr& e) {
                switch (e.k) {
                case Expr::K::Lit:
                    return;
                case Expr::K::Var:
                case Expr::K::Deref:
                    ++reads[e.var];
                    return;
                case Expr::K::Binary:
                    (*this)(*e.lhs);
                    (*this)(*e.rhs);
                    return;
                }
            }
        } walk{reads};
        if (s.k == Stmt::K::AssignDeref) ++reads[s.target];
        walk(*s.value);
    }

    int int_size() const { return types_.metrics().int_m.size; }
    int int_align() const { return types_.metrics().int_m.align; }
    int ptr_size() const { return types_.metrics().pointer_m.size; }
    int ptr_align() const { return types_.metrics().pointer_m.align; }
    int char_size() const { return types_.metrics().char_m.size; }
    int char_align() const { return types_.metrics().char_m.align; }

    Value addr_of(const SymbolRef& sym) {
        return node("ADDRL", Suffix::P, ptr_size(),
                    {Value::integer(uids_.intern_symbol(sym))});
    }

    Value indir(Suffix suffix, int size, Value address) {
        return node("Unary", suffix, size,
                    {Value::integer(static_cast<int>(Op::INDIR)),
                     std::move(address)});
    }

    /// Rvalue of a variable, routed through the statement's CSE temporary
    /// when the variable is read more than once.
    Value read_var(const SymbolRef& sym, ValueList& trees) {
        Suffix suffix = is_pointer(sym) ? Suffix::P : Suffix::I;
        int size = is_pointer(sym) ? ptr_size() : int_size();
        if (stmt_reads_[sym->id] < 2) {
            return indir(suffix, size, addr_of(sym));
        }
        auto it = cse_temps_.find(sym->id);
        if (it != cse_temps_.end()) {
            return indir(suffix, size, addr_of(it->second));
        }
        SymbolRef temp = make_temp(sym->type, trees);
        cse_temps_.emplace(sym->id, temp);
        return node("CSE", suffix, size,
                    {Value::integer(uids_.intern_symbol(temp)),
                     indir(suffix, size, addr_of(sym))});
    }

    SymbolRef make_temp(const TypeRef& type, ValueList&) {
        auto temp = std::make_shared<Symbol>();
        temp->id = "t" + std::to_string(++temp_counter_);
        temp->type = type;
        temp->scope = Scope::Local;
        temp->sclass = Sclass::Register;
        temp->ref = 2;
        temp->flags = kFlagTemporary | kFlagGenerated;
        pending_locals_.push_back(temp);
        return temp;
    }

    /// Lowers `p++`, appending the update trees, and returns the temporary
    /// holding the old pointer value.
    SymbolRef post_increment(const SymbolRef& ptr, ValueList& trees, int line,
                             int col) {
        if (!is_pointer(ptr)) {
            throw FrontendError(line, col,
                                "'++' applies only to pointer variables; '" +
                                    ptr->id + "' is not one");
        }
        SymbolRef temp = make_temp(ptr->type, trees);
        // t = p
        trees.push_back(node(
            "ASGN", Suffix::P, ptr_size(),
            {addr_of(temp), read_var(ptr, trees), Value::integer(ptr_size()),
             Value::integer(ptr_align())}));
        // p = t + <pointee size>
        int step = ptr->type->ref->size;
        Value sum = node("Binary", Suffix::P, ptr_size(),
                         {Value::integer(static_cast<int>(Op::ADD)),
                          indir(Suffix::P, ptr_size(), addr_of(temp)),
                          node("CNST", Suffix::I, int_size(),
                               {Value::integer(step)})});
        trees.push_back(node("ASGN", Suffix::P, ptr_size(),
                             {addr_of(ptr), std::move(sum),
                              Value::integer(ptr_size()),
                              Value::integer(ptr_align())}));
        return temp;
    }

    /// Pointer rvalue used as a store or load address.
    Value pointer_value(const std::string& name, bool post_inc,
                        ValueList& trees, int line, int col) {
        const SymbolRef& sym = lookup(name, line, col);
        if (post_inc) {
            SymbolRef temp = post_increment(sym, trees, line, col);
            return indir(Suffix::P, ptr_size(), addr_of(temp));
        }
        if (!is_pointer(sym)) {
            throw FrontendError(line, col,
                                "cannot dereference '" + name +
                                    "'; it is not a pointer");
        }
        return read_var(sym, trees);
    }

    /// Integer-valued expression.
    Value lower_expr(const Expr& e, ValueList& trees) {
        switch (e.k) {
        case Expr::K::Lit:
            return node("CNST", Suffix::I, int_size(),
                        {Value::integer(e.lit)});
        case Expr::K::Var: {
            const SymbolRef& sym = lookup(e.var, e.line, e.col);
            if (is_pointer(sym)) {
                throw FrontendError(e.line, e.col,
                                    "pointer '" + e.var +
                                        "' used as an integer value");
            }
            return read_var(sym, trees);
        }
        case Expr::K::Deref: {
            Value address =
                pointer_value(e.var, e.post_inc, trees, e.line, e.col);
            // Load the char, then widen it to int.
            Value load = indir(Suffix::I, char_size(), std::move(address));
            return node("CVT", Suffix::I, int_size(),
                        {Value::integer(static_cast<int>(Op::CVI)),
                         std::move(load), Value::integer(char_size())});
        }
        case Expr::K::Binary: {
            Op op = e.op == '+'   ? Op::ADD
                    : e.op == '-' ? Op::SUB
                    : e.op == '*' ? Op::MUL
                                  : Op::DIV;
            Value lhs = lower_expr(*e.lhs, trees);
            Value rhs = lower_expr(*e.rhs, trees);
            return node("Binary", Suffix::I, int_size(),
                        {Value::integer(static_cast<int>(op)),
                         std::move(lhs), std::move(rhs)});
        }
        }
        throw std::logic_error("unhandled expression kind");
    }

    void lower_statement(const Stmt& s, ValueList& codelist) {
        stmt_reads_.clear();
        cse_temps_.clear();
        pending_locals_.clear();
        count_statement_reads(s, stmt_reads_);

        ValueList trees;
        switch (s.k) {
        case Stmt::K::AssignVar: {
            const SymbolRef& sym = lookup(s.target, s.line, s.col);
            if (is_pointer(sym)) {
                throw FrontendError(s.line, s.col,
                                    "type mismatch on assignment: '" +
                                        s.target +
                                        "' is a pointer and the value is an "
                                        "integer");
            }
            Value rhs = lower_expr(*s.value, trees);
            trees.push_back(node("ASGN", Suffix::I, int_size(),
                                 {addr_of(sym), std::move(rhs),
                                  Value::integer(int_size()),
                                  Value::integer(int_align())}));
            break;
        }
        case Stmt::K::AssignDeref: {
            Value address =
                pointer_value(s.target, s.post_inc, trees, s.line, s.col);
            Value rhs = lower_expr(*s.value, trees);
            // Narrow the int to the char being stored.
            Value narrowed =
                node("CVT", Suffix::I, char_size(),
                     {Value::integer(static_cast<int>(Op::CVI)),
                      std::move(rhs), Value::integer(int_size())});
            trees.push_back(node("ASGN", Suffix::I, char_size(),
                                 {std::move(address), std::move(narrowed),
                                  Value::integer(char_size()),
                                  Value::integer(char_align())}));
            break;
        }
        case Stmt::K::Print: {
            Value arg = lower_expr(*s.value, trees);
            trees.push_back(node("ARG", Suffix::I, int_size(),
                                 {std::move(arg), Value::integer(int_size()),
                                  Value::integer(int_align())}));
            Value callee = node("ADDRG", Suffix::P, ptr_size(),
                                {Value::integer(uid_of(print_))});
            int fnty_uid = uids_.intern_type(print_->type);
            trees.push_back(node("CALL", Suffix::V, 0,
                                 {std::move(callee),
                                  Value::integer(fnty_uid)}));
            ++ncalls_;
            break;
        }
        }
        for (const SymbolRef& temp : pending_locals_) {
            codelist.push_back(local_call(temp));
        }
        codelist.push_back(iface("Forest", {Value::list(std::move(trees))}));
    }

    const asdl::SchemaEnv& env_;
    TypeTable types_;
    UidTable uids_;
    std::map<std::string, SymbolRef> vars_;
    SymbolRef main_;
    SymbolRef print_;
    int ncalls_ = 0;
    int temp_counter_ = 0;
    std::map<std::string, int> reads_total_;
    std::map<std::string, int> stmt_reads_;
    std::map<std::string, SymbolRef> cse_temps_;
    std::vector<SymbolRef> pending_locals_;
};

}  // namespace

Value compile_to_value(std::string_view source, const Metrics& metrics) {
    std::vector<MiniItem> items = MiniParser(source).parse();
    return Compiler(metrics).run(items);
}

std::vector<std::uint8_t> compile(std::string_view source,
                                  const Metrics& metrics) {
    Value program = compile_to_value(source, metrics);
    asdl::pickle::ByteWriter w;
    asdl::pickle::write_instance(rcc_env(), "program", program, w);
    return w.take();
}

std::string monolithic(std::string_view source, const Metrics& metrics) {
    return emit_assembly(compile_to_value(source, metrics));
}

}  // namespace minircc
