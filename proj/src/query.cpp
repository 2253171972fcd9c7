#include "dex/query.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "dex/error.hpp"

namespace dex {

namespace {

std::shared_ptr<Formula> node(Formula::Kind k) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}

}  // namespace

FormulaPtr f_true() {
    static const FormulaPtr t = node(Formula::Kind::kTrue);
    return t;
}

FormulaPtr f_false() {
    static const FormulaPtr f = node(Formula::Kind::kFalse);
    return f;
}

FormulaPtr f_atom(Atom a) {
    auto f = node(Formula::Kind::kAtom);
    f->atom = std::move(a);
    return f;
}

FormulaPtr f_eq(Term a, Term b) {
    auto f = node(Formula::Kind::kEq);
    f->lhs = a;
    f->rhs = b;
    return f;
}

FormulaPtr f_not(FormulaPtr g) {
    auto f = node(Formula::Kind::kNot);
    f->children.push_back(std::move(g));
    return f;
}

FormulaPtr f_and(std::vector<FormulaPtr> fs) {
    if (fs.empty()) return f_true();
    if (fs.size() == 1) return fs.front();
    auto f = node(Formula::Kind::kAnd);
    f->children = std::move(fs);
    return f;
}

FormulaPtr f_or(std::vector<FormulaPtr> fs) {
    if (fs.empty()) return f_false();
    if (fs.size() == 1) return fs.front();
    auto f = node(Formula::Kind::kOr);
    f->children = std::move(fs);
    return f;
}

FormulaPtr f_exists(Term v, FormulaPtr g) {
    auto f = node(Formula::Kind::kExists);
    f->var = v;
    f->children.push_back(std::move(g));
    return f;
}

FormulaPtr f_forall(Term v, FormulaPtr g) {
    auto f = node(Formula::Kind::kForall);
    f->var = v;
    f->children.push_back(std::move(g));
    return f;
}

FormulaPtr f_exists(const std::vector<Term>& vs, FormulaPtr f) {
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) f = f_exists(*it, std::move(f));
    return f;
}

FormulaPtr f_forall(const std::vector<Term>& vs, FormulaPtr f) {
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) f = f_forall(*it, std::move(f));
    return f;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<Term>& bound, std::set<Term>& out) {
    auto add = [&](const Term& t) {
        if (t.is_var() && !bound.contains(t)) out.insert(t);
    };
    switch (f->kind) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
        return;
    case Formula::Kind::kAtom:
        for (const auto& t : f->atom.args) add(t);
        return;
    case Formula::Kind::kEq:
        add(f->lhs);
        add(f->rhs);
        return;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
        bool fresh = bound.insert(f->var).second;
        collect_free(f->children[0], bound, out);
        if (fresh) bound.erase(f->var);
        return;
    }
    default:
        for (const auto& c : f->children) collect_free(c, bound, out);
    }
}

void collect_constants(const FormulaPtr& f, std::set<Term>& out) {
    auto add = [&](const Term& t) {
        if (t.is_const()) out.insert(t);
    };
    if (f->kind == Formula::Kind::kAtom)
        for (const auto& t : f->atom.args) add(t);
    if (f->kind == Formula::Kind::kEq) {
        add(f->lhs);
        add(f->rhs);
    }
    for (const auto& c : f->children) collect_constants(c, out);
}

}  // namespace

std::set<Term> free_variables(const FormulaPtr& f) {
    std::set<Term> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<Term> constants_of(const FormulaPtr& f) {
    std::set<Term> out;
    collect_constants(f, out);
    return out;
}

std::set<Term> constants_of(const Query& q) { return constants_of(q.formula); }

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
    switch (a->kind) {
    case Formula::Kind::kAtom:
        if (!(a->atom == b->atom)) return false;
        break;
    case Formula::Kind::kEq:
        if (!(a->lhs == b->lhs && a->rhs == b->rhs)) return false;
        break;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall:
        if (!(a->var == b->var)) return false;
        break;
    default:
        break;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!structurally_equal(a->children[i], b->children[i])) return false;
    return true;
}

Query Query::make(std::vector<Term> head, FormulaPtr formula) {
    std::set<Term> hs;
    for (const auto& v : head) {
        if (!v.is_var()) throw SchemaError("query head must list variables, got " + to_string(v));
        if (!hs.insert(v).second) throw SchemaError("query head repeats variable " + v.name());
    }
    auto fv = free_variables(formula);
    if (fv != hs) {
        std::string msg = "free variables of the query formula {";
        bool first = true;
        for (const auto& v : fv) {
            msg += (first ? "" : ", ") + v.name();
            first = false;
        }
        msg += "} differ from the head variables";
        throw SchemaError(msg);
    }
    return Query{std::move(head), std::move(formula)};
}

namespace {

using Env = std::map<Term, Term>;

class Evaluator {
public:
    Evaluator(const Instance& inst, const std::set<Term>& extra) : inst_(inst) {
        domain_ = inst.adom();
        domain_.insert(extra.begin(), extra.end());
    }

    const std::set<Term>& domain() const { return domain_; }

    Term value(const Term& t, const Env& env) const {
        if (!t.is_var()) return t;
        auto it = env.find(t);
        return it == env.end() ? t : it->second;
    }

    bool sat(const FormulaPtr& f, Env& env) const {
        switch (f->kind) {
        case Formula::Kind::kTrue:
            return true;
        case Formula::Kind::kFalse:
            return false;
        case Formula::Kind::kAtom: {
            Atom g(f->atom.relation, {});
            g.args.reserve(f->atom.arity());
            for (const auto& t : f->atom.args) g.args.push_back(value(t, env));
            return inst_.contains(g);
        }
        case Formula::Kind::kEq:
            return value(f->lhs, env) == value(f->rhs, env);
        case Formula::Kind::kNot:
            return !sat(f->children[0], env);
        case Formula::Kind::kAnd:
            return std::all_of(f->children.begin(), f->children.end(),
                               [&](const FormulaPtr& c) { return sat(c, env); });
        case Formula::Kind::kOr:
            return std::any_of(f->children.begin(), f->children.end(),
                               [&](const FormulaPtr& c) { return sat(c, env); });
        case Formula::Kind::kExists:
        case Formula::Kind::kForall: {
            bool exists = f->kind == Formula::Kind::kExists;
            const Term& v = f->var;
            std::optional<Term> saved;
            if (auto it = env.find(v); it != env.end()) saved = it->second;
            env.erase(v);
            bool result = !exists;
            auto try_value = [&](const Term& c) {
                env[v] = c;
                bool s = sat(f->children[0], env);
                if (exists && s) result = true;
                if (!exists && !s) result = false;
                return result == !exists;
            };
            // An existential over a formula that requires an atom mentioning
            // v only needs the values v takes in matching facts.
            std::optional<std::set<Term>> cands;
            if (exists) cands = candidates(f->children[0], v, env);
            if (cands) {
                for (const auto& c : *cands)
                    if (domain_.contains(c) && !try_value(c)) break;
            } else {
                for (const auto& c : domain_)
                    if (!try_value(c)) break;
            }
            env.erase(v);
            if (saved) env[v] = *saved;
            return result;
        }
        }
        return false;
    }

    // Values of v for which f can possibly hold, when f forces v to occur
    // in a positive atom or equality.
    std::optional<std::set<Term>> candidates(const FormulaPtr& f, const Term& v, const Env& env) const {
        switch (f->kind) {
        case Formula::Kind::kAtom: {
            bool mentions = false;
            for (const auto& t : f->atom.args) mentions |= t == v;
            if (!mentions) return std::nullopt;
            std::set<Term> out;
            for (const auto& fact : inst_.facts_of(f->atom.relation)) {
                if (fact.arity() != f->atom.arity()) continue;
                std::optional<Term> val;
                bool ok = true;
                for (std::size_t i = 0; i < fact.arity() && ok; ++i) {
                    const Term& t = f->atom.args[i];
                    if (t == v) {
                        if (val && !(*val == fact.args[i])) ok = false;
                        val = fact.args[i];
                    } else if (!t.is_var() || env.contains(t)) {
                        ok = value(t, env) == fact.args[i];
                    }
                }
                if (ok && val) out.insert(*val);
            }
            return out;
        }
        case Formula::Kind::kEq: {
            if (f->lhs == v && !(f->rhs == v) && (!f->rhs.is_var() || env.contains(f->rhs)))
                return std::set<Term>{value(f->rhs, env)};
            if (f->rhs == v && !(f->lhs == v) && (!f->lhs.is_var() || env.contains(f->lhs)))
                return std::set<Term>{value(f->lhs, env)};
            return std::nullopt;
        }
        case Formula::Kind::kFalse:
            return std::set<Term>{};
        case Formula::Kind::kAnd: {
            std::optional<std::set<Term>> best;
            for (const auto& c : f->children) {
                auto s = candidates(c, v, env);
                if (s && (!best || s->size() < best->size())) best = std::move(s);
            }
            return best;
        }
        case Formula::Kind::kOr: {
            std::set<Term> out;
            for (const auto& c : f->children) {
                auto s = candidates(c, v, env);
                if (!s) return std::nullopt;
                out.insert(s->begin(), s->end());
            }
            return out;
        }
        case Formula::Kind::kExists: {
            if (f->var == v) return std::nullopt;
            // Inner variable is unbound here, so atoms mentioning it act as
            // wildcards; that is what candidates() already assumes.
            if (env.contains(f->var)) {
                Env inner = env;
                inner.erase(f->var);
                return candidates(f->children[0], v, inner);
            }
            return candidates(f->children[0], v, env);
        }
        default:
            return std::nullopt;
        }
    }

private:
    const Instance& inst_;
    std::set<Term> domain_;
};

void enumerate_head(const Evaluator& ev, const Query& q, std::size_t i, Env& env, Tuple& cur,
                    std::set<Tuple>& out) {
    if (i == q.head.size()) {
        if (ev.sat(q.formula, env)) out.insert(cur);
        return;
    }
    const Term& v = q.head[i];
    auto visit = [&](const Term& c) {
        env[v] = c;
        cur.push_back(c);
        enumerate_head(ev, q, i + 1, env, cur, out);
        cur.pop_back();
        env.erase(v);
    };
    auto cands = ev.candidates(q.formula, v, env);
    if (cands) {
        for (const auto& c : *cands)
            if (ev.domain().contains(c)) visit(c);
    } else {
        for (const auto& c : ev.domain()) visit(c);
    }
}

}  // namespace

std::set<Tuple> evaluate(const Query& q, const Instance& inst, const std::set<Term>& extra_domain) {
    Evaluator ev(inst, extra_domain);
    std::set<Tuple> out;
    Env env;
    Tuple cur;
    enumerate_head(ev, q, 0, env, cur, out);
    return out;
}

bool holds(const FormulaPtr& f, const Instance& inst, const std::set<Term>& extra_domain) {
    Evaluator ev(inst, extra_domain);
    Env env;
    return ev.sat(f, env);
}

bool is_positive(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
    case Formula::Kind::kAtom:
        return true;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kExists:
        return std::all_of(f->children.begin(), f->children.end(),
                           [](const FormulaPtr& c) { return is_positive(c); });
    default:
        return false;
    }
}

bool is_positive(const Query& q) { return is_positive(q.formula); }

std::set<Tuple> drop_null_tuples(const std::set<Tuple>& answers) {
    std::set<Tuple> out;
    for (const auto& t : answers)
        if (std::none_of(t.begin(), t.end(), [](const Term& x) { return x.is_null(); })) out.insert(t);
    return out;
}

}  // namespace dex
