#include "dex/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "dex/error.hpp"

namespace dex {

namespace {

enum class Tok {
    kIdent,
    kQuoted,
    kNat,
    kNullTok,
    kLParen,
    kRParen,
    kComma,
    kDot,
    kSlash,
    kColon,
    kArrow,
    kDefine,
    kIff,
    kEq,
    kNeq,
    kAmp,
    kBar,
    kBang,
    kEnd,
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kQuoted: return "quoted string";
    case Tok::kNat: return "number";
    case Tok::kNullTok: return "null";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kSlash: return "'/'";
    case Tok::kColon: return "':'";
    case Tok::kArrow: return "'->'";
    case Tok::kDefine: return "':='";
    case Tok::kIff: return "'<->'";
    case Tok::kEq: return "'='";
    case Tok::kNeq: return "'!='";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kBang: return "'!'";
    case Tok::kEnd: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    Lexer(std::string_view text, const std::string& origin) : text_(text), origin_(origin) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip();
            Token t{Tok::kEnd, "", line_, col_};
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                               text_[pos_] == '_'))
                    advance();
                t.text = std::string(text_.substr(start, pos_ - start));
                t.kind = Tok::kIdent;
                if (t.text.size() > 1 && t.text[0] == '_' && is_natural(std::string_view(t.text).substr(1)))
                    t.kind = Tok::kNullTok;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
                t.kind = Tok::kNat;
                t.text = std::string(text_.substr(start, pos_ - start));
            } else if (c == '"') {
                advance();
                t.kind = Tok::kQuoted;
                for (;;) {
                    if (pos_ >= text_.size() || text_[pos_] == '\n')
                        throw ParseError(origin_, t.line, t.column, "unterminated string");
                    char d = text_[pos_];
                    advance();
                    if (d == '"') break;
                    if (d == '\\') {
                        if (pos_ >= text_.size()) throw ParseError(origin_, t.line, t.column, "unterminated string");
                        d = text_[pos_];
                        advance();
                    }
                    t.text.push_back(d);
                }
            } else {
                auto two = text_.substr(pos_, 2);
                auto three = text_.substr(pos_, 3);
                if (three == "<->") {
                    t.kind = Tok::kIff;
                    advance(3);
                } else if (two == "->") {
                    t.kind = Tok::kArrow;
                    advance(2);
                } else if (two == ":=") {
                    t.kind = Tok::kDefine;
                    advance(2);
                } else if (two == "!=") {
                    t.kind = Tok::kNeq;
                    advance(2);
                } else {
                    switch (c) {
                    case '(': t.kind = Tok::kLParen; break;
                    case ')': t.kind = Tok::kRParen; break;
                    case ',': t.kind = Tok::kComma; break;
                    case '.': t.kind = Tok::kDot; break;
                    case '/': t.kind = Tok::kSlash; break;
                    case ':': t.kind = Tok::kColon; break;
                    case '=': t.kind = Tok::kEq; break;
                    case '&': t.kind = Tok::kAmp; break;
                    case '|': t.kind = Tok::kBar; break;
                    case '!': t.kind = Tok::kBang; break;
                    default:
                        throw ParseError(origin_, line_, col_, std::string("unexpected character '") + c + "'");
                    }
                    advance();
                }
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    const std::string& origin_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

enum class TermContext { kDependency, kInstance, kQuery };

class Parser {
public:
    Parser(std::string_view text, const std::string& origin)
        : origin_(origin), toks_(Lexer(text, origin).run()) {}

    Setting setting() {
        Setting s;
        while (is_ident("source") || is_ident("target")) {
            bool src = peek().text == "source";
            next();
            for (;;) {
                Token name = expect(Tok::kIdent, "relation name");
                expect(Tok::kSlash, "'/'");
                Token ar = expect(Tok::kNat, "arity");
                std::size_t arity = std::stoul(ar.text);
                if (arity == 0) fail(ar, "relations must have arity at least 1");
                Symbol rel(name.text);
                if (s.source.contains(rel) || s.target.contains(rel)) {
                    bool other = src ? s.target.contains(rel) : s.source.contains(rel);
                    fail(name, other ? "relation " + name.text + " is declared in both source and target schemas"
                                     : "relation " + name.text + " is declared twice");
                }
                (src ? s.source : s.target).emplace(rel, arity);
                if (peek().kind != Tok::kComma) break;
                next();
            }
            expect(Tok::kDot, "'.'");
        }
        std::size_t n_st = 0, n_t = 0;
        while (peek().kind != Tok::kEnd) {
            Token kw = expect(Tok::kIdent, "'st:' or 't:'");
            bool st = kw.text == "st";
            if (!st && kw.text != "t") fail(kw, "expected 'st:' or 't:' to start a dependency", "'st:' or 't:'");
            expect(Tok::kColon, "':'");
            std::string id = (st ? "st" : "t") + std::to_string(st ? ++n_st : ++n_t);
            const Schema& body_schema = st ? s.source : s.target;
            auto body = conjunction(body_schema, st ? "source" : "target");
            expect(Tok::kArrow, "'->'");
            std::vector<Term> exvars;
            std::optional<Token> exists_tok;
            if (is_ident("exists")) {
                exists_tok = next();
                for (;;) {
                    Token v = expect(Tok::kIdent, "variable");
                    Term t = make_term(v, TermContext::kDependency);
                    if (!t.is_var()) fail(v, "existential " + v.text + " is not a variable");
                    exvars.push_back(t);
                    if (peek().kind != Tok::kComma) break;
                    next();
                }
                expect(Tok::kDot, "'.'");
            }
            bool is_eq = peek().kind != Tok::kIdent || peek(1).kind != Tok::kLParen;
            {
                if (is_eq) {
                    Token at = peek();
                    if (st) fail(at, "source-to-target dependencies cannot have an equality head");
                    if (exists_tok) fail(*exists_tok, "an equality head cannot have existential variables");
                    Term a = term(TermContext::kDependency);
                    expect(Tok::kEq, "'='");
                    Term b = term(TermContext::kDependency);
                    expect(Tok::kDot, "'.'");
                    try {
                        s.t_deps.emplace_back(Egd::make(id, std::move(body), a, b));
                    } catch (const SchemaError& e) {
                        fail(kw, e.what());
                    }
                } else {
                    auto head = conjunction(s.target, "target");
                    expect(Tok::kDot, "'.'");
                    try {
                        Tgd t = Tgd::make(id, std::move(body), std::move(head), std::move(exvars));
                        if (st)
                            s.st_tgds.push_back(std::move(t));
                        else
                            s.t_deps.emplace_back(std::move(t));
                    } catch (const SchemaError& e) {
                        fail(kw, e.what());
                    }
                }
            }
        }
        return s;
    }

    Instance instance(const Schema& schema) {
        Instance inst;
        while (peek().kind != Tok::kEnd) {
            Atom a = atom(schema, "", TermContext::kInstance);
            expect(Tok::kDot, "'.'");
            inst.insert(a);
        }
        return inst;
    }

    Query query(const Schema& schema) {
        Token name = expect(Tok::kIdent, "query name");
        (void)name;
        expect(Tok::kLParen, "'('");
        std::vector<Term> head;
        if (peek().kind != Tok::kRParen) {
            for (;;) {
                Token v = peek();
                Term t = term(TermContext::kQuery);
                if (!t.is_var()) fail(v, "query head must list variables");
                head.push_back(t);
                if (peek().kind != Tok::kComma) break;
                next();
            }
        }
        expect(Tok::kRParen, "')'");
        Token def = expect(Tok::kDefine, "':='");
        schema_ = &schema;
        FormulaPtr f = formula();
        expect(Tok::kDot, "'.'");
        expect(Tok::kEnd, "end of input");
        try {
            return Query::make(std::move(head), std::move(f));
        } catch (const SchemaError& e) {
            fail(def, e.what());
        }
    }

private:
    const Token& peek(std::size_t k = 0) const {
        std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }

    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }

    bool is_ident(const char* text) const {
        return peek().kind == Tok::kIdent && peek().text == text;
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg, const std::string& expected = {}) const {
        throw ParseError(origin_, t.line, t.column, msg, expected);
    }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) {
            const Token& t = peek();
            std::string found = t.kind == Tok::kEnd ? "end of input"
                                : t.text.empty()    ? describe(t.kind)
                                                    : "'" + t.text + "'";
            fail(t, "unexpected " + found, what);
        }
        return next();
    }

    Term make_term(const Token& t, TermContext ctx) {
        switch (t.kind) {
        case Tok::kNat:
        case Tok::kQuoted:
            return Term::constant(t.text);
        case Tok::kNullTok:
            fail(t, "labeled nulls are not allowed here");
        case Tok::kIdent: {
            bool lower = std::islower(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_';
            if (!lower) return Term::constant(t.text);
            if (ctx == TermContext::kInstance)
                fail(t, "variable " + t.text + " in a fact; quote constants like \"" + t.text + "\"");
            return Term::variable(t.text);
        }
        default:
            fail(t, "unexpected " + std::string(describe(t.kind)), "term");
        }
    }

    Term term(TermContext ctx) {
        Token t = next();
        return make_term(t, ctx);
    }

    Atom atom(const Schema& schema, const char* where, TermContext ctx) {
        Token name = expect(Tok::kIdent, "relation name");
        expect(Tok::kLParen, "'('");
        std::vector<Term> args;
        for (;;) {
            args.push_back(term(ctx));
            if (peek().kind != Tok::kComma) break;
            next();
        }
        expect(Tok::kRParen, "')'");
        Symbol rel(name.text);
        if (!schema.empty()) {
            auto it = schema.find(rel);
            if (it == schema.end()) {
                std::string msg = "relation " + name.text + " is not declared";
                if (*where) msg += std::string(" in the ") + where + " schema";
                fail(name, msg);
            }
            if (it->second != args.size())
                fail(name, name.text + " has arity " + std::to_string(it->second) + ", used with " +
                               std::to_string(args.size()));
        }
        return Atom(rel, std::move(args));
    }

    std::vector<Atom> conjunction(const Schema& schema, const char* where) {
        std::vector<Atom> out;
        for (;;) {
            out.push_back(atom(schema, where, TermContext::kDependency));
            if (peek().kind != Tok::kComma) break;
            next();
        }
        return out;
    }

    // Precedence, loosest first: <->, ->, |, &, !. Quantifier bodies extend
    // as far right as possible.
    FormulaPtr formula() {
        FormulaPtr f = implication();
        while (peek().kind == Tok::kIff) {
            next();
            FormulaPtr g = implication();
            f = f_or({f_and({f, g}), f_and({f_not(f), f_not(g)})});
        }
        return f;
    }

    FormulaPtr implication() {
        FormulaPtr f = disjunction();
        if (peek().kind == Tok::kArrow) {
            next();
            FormulaPtr g = implication();
            return f_or({f_not(f), g});
        }
        return f;
    }

    FormulaPtr disjunction() {
        std::vector<FormulaPtr> parts{conjunct()};
        while (peek().kind == Tok::kBar) {
            next();
            parts.push_back(conjunct());
        }
        return f_or(std::move(parts));
    }

    FormulaPtr conjunct() {
        std::vector<FormulaPtr> parts{unary()};
        while (peek().kind == Tok::kAmp) {
            next();
            parts.push_back(unary());
        }
        return f_and(std::move(parts));
    }

    FormulaPtr unary() {
        if (peek().kind == Tok::kBang) {
            next();
            return f_not(unary());
        }
        if (is_ident("exists") || is_ident("forall")) {
            bool ex = next().text == "exists";
            std::vector<Term> vars;
            for (;;) {
                Token v = peek();
                Term t = term(TermContext::kQuery);
                if (!t.is_var()) fail(v, "quantified " + v.text + " is not a variable");
                vars.push_back(t);
                if (peek().kind != Tok::kComma) break;
                next();
            }
            expect(Tok::kDot, "'.'");
            FormulaPtr body = formula();
            return ex ? f_exists(vars, body) : f_forall(vars, body);
        }
        return primary();
    }

    FormulaPtr primary() {
        const Token& t = peek();
        if (t.kind == Tok::kLParen) {
            next();
            FormulaPtr f = formula();
            expect(Tok::kRParen, "')'");
            return f;
        }
        if (t.kind == Tok::kIdent && peek(1).kind == Tok::kLParen)
            return f_atom(atom(*schema_, "", TermContext::kQuery));
        if (t.kind == Tok::kIdent && (t.text == "true" || t.text == "false") &&
            peek(1).kind != Tok::kEq && peek(1).kind != Tok::kNeq) {
            return next().text == "true" ? f_true() : f_false();
        }
        Term a = term(TermContext::kQuery);
        if (peek().kind == Tok::kEq) {
            next();
            return f_eq(a, term(TermContext::kQuery));
        }
        if (peek().kind == Tok::kNeq) {
            next();
            return f_not(f_eq(a, term(TermContext::kQuery)));
        }
        fail(peek(), "unexpected " + std::string(describe(peek().kind)), "'=' or '!='");
    }

    const std::string& origin_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Schema* schema_ = nullptr;
};

int precedence(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Kind::kOr: return 1;
    case Formula::Kind::kAnd: return 2;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: return 0;
    default: return 3;
    }
}

void print(const FormulaPtr& f, std::string& out);

void print_child(const FormulaPtr& c, int parent, std::string& out) {
    // Same-level children are parenthesized so nesting survives a re-parse.
    if (precedence(c) <= parent) {
        out += "(";
        print(c, out);
        out += ")";
    } else {
        print(c, out);
    }
}

void print(const FormulaPtr& f, std::string& out) {
    switch (f->kind) {
    case Formula::Kind::kTrue:
        out += "true";
        return;
    case Formula::Kind::kFalse:
        out += "false";
        return;
    case Formula::Kind::kAtom:
        out += to_string(f->atom);
        return;
    case Formula::Kind::kEq:
        out += to_string(f->lhs) + " = " + to_string(f->rhs);
        return;
    case Formula::Kind::kNot: {
        const auto& c = f->children[0];
        out += "!";
        if (c->kind == Formula::Kind::kAtom || c->kind == Formula::Kind::kTrue ||
            c->kind == Formula::Kind::kFalse || c->kind == Formula::Kind::kNot) {
            print(c, out);
        } else {
            out += "(";
            print(c, out);
            out += ")";
        }
        return;
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
        int p = precedence(f);
        const char* sep = f->kind == Formula::Kind::kAnd ? " & " : " | ";
        for (std::size_t i = 0; i < f->children.size(); ++i) {
            if (i) out += sep;
            print_child(f->children[i], p, out);
        }
        return;
    }
    case Formula::Kind::kExists:
    case Formula::Kind::kForall:
        out += f->kind == Formula::Kind::kExists ? "exists " : "forall ";
        out += to_string(f->var) + ". ";
        print(f->children[0], out);
        return;
    }
}

}  // namespace

Setting parse_setting(std::string_view text, const std::string& origin) {
    Parser p(text, origin);
    return p.setting();
}

Instance parse_instance(std::string_view text, const Schema& schema, const std::string& origin) {
    Parser p(text, origin);
    return p.instance(schema);
}

Query parse_query(std::string_view text, const Schema& schema, const std::string& origin) {
    Parser p(text, origin);
    return p.query(schema);
}

std::string to_string(const FormulaPtr& f) {
    std::string out;
    print(f, out);
    return out;
}

std::string to_string(const Query& q) {
    std::string out = "Q(";
    for (std::size_t i = 0; i < q.head.size(); ++i) {
        if (i) out += ", ";
        out += to_string(q.head[i]);
    }
    return out + ") := " + to_string(q.formula) + ".";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace dex
