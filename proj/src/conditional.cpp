#include "dex/conditional.hpp"

#include <algorithm>

#include "dex/chase.hpp"
#include "dex/error.hpp"

namespace dex {

namespace {

using Kind = Condition::Kind;

std::shared_ptr<Condition> make(Kind k) {
    auto c = std::make_shared<Condition>();
    c->kind = k;
    return c;
}

bool is(const ConditionPtr& c, Kind k) { return c->kind == k; }

// Null < constant; between nulls the smaller id first.
bool term_first(const Term& a, const Term& b) {
    if (a.is_null() != b.is_null()) return a.is_null();
    return a < b;
}

void collect(const ConditionPtr& c, std::set<Term>& nulls, std::set<Term>& consts) {
    if (c->kind == Kind::kEq) {
        for (const auto& t : {c->lhs, c->rhs}) {
            if (t.is_null()) nulls.insert(t);
            else consts.insert(t);
        }
    }
    for (const auto& ch : c->children) collect(ch, nulls, consts);
}

Term value(const Term& t, const std::map<Term, Term>& nu) {
    if (!t.is_null()) return t;
    auto it = nu.find(t);
    return it == nu.end() ? t : it->second;
}

struct UnionFind {
    std::map<Term, Term> parent;

    Term find(const Term& t) {
        auto it = parent.find(t);
        if (it == parent.end() || it->second == t) return t;
        Term r = find(it->second);
        parent[t] = r;
        return r;
    }

    // False when two distinct constants end up in one class.
    bool unite(const Term& a, const Term& b) {
        Term ra = find(a), rb = find(b);
        if (ra == rb) return true;
        if (ra.is_const() && rb.is_const()) return false;
        if (ra.is_const()) std::swap(ra, rb);
        parent[ra] = rb;
        return true;
    }
};

std::vector<Term> internal_fresh(std::size_t n) {
    std::vector<Term> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(Term::constant("\x1f" + std::to_string(i)));
    return out;
}

bool valid_by_enumeration(const ConditionPtr& c) {
    std::set<Term> nulls, consts;
    collect(c, nulls, consts);
    bool ok = true;
    for_each_valuation({nulls.begin(), nulls.end()}, {consts.begin(), consts.end()},
                       [&](const std::map<Term, Term>& nu) {
                           if (!evaluate_condition(c, nu)) ok = false;
                           return ok;
                       });
    return ok;
}

std::map<Term, Term> generic_valuation(const ConditionPtr& c) {
    std::set<Term> nulls, consts;
    collect(c, nulls, consts);
    std::map<Term, Term> nu;
    auto fresh = internal_fresh(nulls.size());
    std::size_t i = 0;
    for (const auto& n : nulls) nu[n] = fresh[i++];
    return nu;
}

}  // namespace

ConditionPtr c_true() {
    static const ConditionPtr t = make(Kind::kTrue);
    return t;
}

ConditionPtr c_false() {
    static const ConditionPtr f = make(Kind::kFalse);
    return f;
}

ConditionPtr c_eq(const Term& a, const Term& b) {
    if (a == b) return c_true();
    if (a.is_const() && b.is_const()) return c_false();
    auto c = make(Kind::kEq);
    if (term_first(a, b)) {
        c->lhs = a;
        c->rhs = b;
    } else {
        c->lhs = b;
        c->rhs = a;
    }
    return c;
}

ConditionPtr c_and(std::vector<ConditionPtr> cs) {
    std::vector<ConditionPtr> out;
    for (auto& c : cs) {
        if (is(c, Kind::kFalse)) return c_false();
        if (is(c, Kind::kTrue)) continue;
        if (is(c, Kind::kAnd)) {
            out.insert(out.end(), c->children.begin(), c->children.end());
        } else if (std::find(out.begin(), out.end(), c) == out.end()) {
            out.push_back(std::move(c));
        }
    }
    if (out.empty()) return c_true();
    if (out.size() == 1) return out.front();
    auto c = make(Kind::kAnd);
    c->children = std::move(out);
    return c;
}

ConditionPtr c_or(std::vector<ConditionPtr> cs) {
    std::vector<ConditionPtr> out;
    for (auto& c : cs) {
        if (is(c, Kind::kTrue)) return c_true();
        if (is(c, Kind::kFalse)) continue;
        if (is(c, Kind::kOr)) {
            out.insert(out.end(), c->children.begin(), c->children.end());
        } else if (std::find(out.begin(), out.end(), c) == out.end()) {
            out.push_back(std::move(c));
        }
    }
    if (out.empty()) return c_false();
    if (out.size() == 1) return out.front();
    auto c = make(Kind::kOr);
    c->children = std::move(out);
    return c;
}

ConditionPtr c_not(ConditionPtr c) {
    if (is(c, Kind::kTrue)) return c_false();
    if (is(c, Kind::kFalse)) return c_true();
    if (is(c, Kind::kNot)) return c->children.front();
    auto n = make(Kind::kNot);
    n->children = {std::move(c)};
    return n;
}

ConditionPtr c_implies(ConditionPtr a, ConditionPtr b) {
    if (is(a, Kind::kTrue)) return b;
    if (is(a, Kind::kFalse) || is(b, Kind::kTrue)) return c_true();
    if (is(b, Kind::kFalse)) return c_not(std::move(a));
    auto n = make(Kind::kImplies);
    n->children = {std::move(a), std::move(b)};
    return n;
}

ConditionPtr c_tuple_eq(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) return c_false();
    std::vector<ConditionPtr> cs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto e = c_eq(a[i], b[i]);
        if (is(e, Kind::kFalse)) return e;
        cs.push_back(std::move(e));
    }
    return c_and(std::move(cs));
}

std::string to_string(const ConditionPtr& c) {
    auto sub = [](const ConditionPtr& ch) {
        bool atomic = ch->kind == Kind::kTrue || ch->kind == Kind::kFalse || ch->kind == Kind::kEq ||
                      ch->kind == Kind::kNot;
        return atomic ? to_string(ch) : "(" + to_string(ch) + ")";
    };
    switch (c->kind) {
        case Kind::kTrue: return "true";
        case Kind::kFalse: return "false";
        case Kind::kEq: return to_string(c->lhs) + " = " + to_string(c->rhs);
        case Kind::kNot: return "!" + sub(c->children[0]);
        case Kind::kImplies: return sub(c->children[0]) + " -> " + sub(c->children[1]);
        case Kind::kAnd:
        case Kind::kOr: {
            std::string out;
            for (std::size_t i = 0; i < c->children.size(); ++i) {
                if (i) out += c->kind == Kind::kAnd ? " & " : " | ";
                out += sub(c->children[i]);
            }
            return out;
        }
    }
    return "";
}

std::set<Term> nulls_of(const ConditionPtr& c) {
    std::set<Term> n, k;
    collect(c, n, k);
    return n;
}

std::set<Term> constants_of(const ConditionPtr& c) {
    std::set<Term> n, k;
    collect(c, n, k);
    return k;
}

bool is_negation_free(const ConditionPtr& c) {
    if (c->kind == Kind::kNot || c->kind == Kind::kImplies) return false;
    return std::all_of(c->children.begin(), c->children.end(), is_negation_free);
}

std::optional<std::vector<std::pair<Term, Term>>> equality_conjunction(const ConditionPtr& c) {
    std::vector<std::pair<Term, Term>> out;
    if (c->kind == Kind::kTrue) return out;
    if (c->kind == Kind::kEq) {
        out.emplace_back(c->lhs, c->rhs);
        return out;
    }
    if (c->kind != Kind::kAnd) return std::nullopt;
    for (const auto& ch : c->children) {
        if (ch->kind != Kind::kEq) return std::nullopt;
        out.emplace_back(ch->lhs, ch->rhs);
    }
    return out;
}

bool evaluate_condition(const ConditionPtr& c, const std::map<Term, Term>& nu) {
    switch (c->kind) {
        case Kind::kTrue: return true;
        case Kind::kFalse: return false;
        case Kind::kEq: return value(c->lhs, nu) == value(c->rhs, nu);
        case Kind::kNot: return !evaluate_condition(c->children[0], nu);
        case Kind::kImplies:
            return !evaluate_condition(c->children[0], nu) || evaluate_condition(c->children[1], nu);
        case Kind::kAnd:
            for (const auto& ch : c->children)
                if (!evaluate_condition(ch, nu)) return false;
            return true;
        case Kind::kOr:
            for (const auto& ch : c->children)
                if (evaluate_condition(ch, nu)) return true;
            return false;
    }
    return false;
}

void for_each_valuation(const std::vector<Term>& nulls, const std::vector<Term>& constants,
                        const std::vector<Term>& fresh,
                        const std::function<bool(const std::map<Term, Term>&)>& visit) {
    std::map<Term, Term> nu;
    bool stop = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (stop) return;
        if (i == nulls.size()) {
            if (!visit(nu)) stop = true;
            return;
        }
        for (const auto& c : constants) {
            nu[nulls[i]] = c;
            rec(i + 1, used);
            if (stop) return;
        }
        for (std::size_t k = 0; k <= used && k < fresh.size(); ++k) {
            nu[nulls[i]] = fresh[k];
            rec(i + 1, std::max(used, k + 1));
            if (stop) return;
        }
        nu.erase(nulls[i]);
    };
    rec(0, 0);
}

void for_each_valuation(const std::vector<Term>& nulls, const std::vector<Term>& constants,
                        const std::function<bool(const std::map<Term, Term>&)>& visit) {
    for_each_valuation(nulls, constants, internal_fresh(nulls.size()), visit);
}

bool condition_consistent(const ConditionPtr& c) {
    if (c->kind == Kind::kTrue) return true;
    if (c->kind == Kind::kFalse) return false;
    if (auto eqs = equality_conjunction(c)) {
        UnionFind uf;
        for (const auto& [a, b] : *eqs)
            if (!uf.unite(a, b)) return false;
        return true;
    }
    std::set<Term> nulls, consts;
    collect(c, nulls, consts);
    bool found = false;
    for_each_valuation({nulls.begin(), nulls.end()}, {consts.begin(), consts.end()},
                       [&](const std::map<Term, Term>& nu) {
                           found = evaluate_condition(c, nu);
                           return !found;
                       });
    return found;
}

bool condition_entails(const ConditionPtr& c, const ConditionPtr& d) {
    if (d->kind == Kind::kTrue || c->kind == Kind::kFalse) return true;
    auto ec = equality_conjunction(c);
    auto ed = equality_conjunction(d);
    if (ec && ed) {
        UnionFind uf;
        for (const auto& [a, b] : *ec)
            if (!uf.unite(a, b)) return true;
        for (const auto& [a, b] : *ed) {
            Term ra = uf.find(a), rb = uf.find(b);
            if (ra != rb) return false;
        }
        return true;
    }
    return valid_by_enumeration(c_implies(c, d));
}

bool condition_valid(const ConditionPtr& c, const ValidityOptions& options) {
    if (c->kind == Kind::kTrue) return true;
    if (c->kind == Kind::kFalse) return false;
    // Every valuation factors through the one that keeps nulls pairwise
    // distinct and apart from all constants; without negation, truth there
    // implies truth everywhere.
    bool generic = evaluate_condition(c, generic_valuation(c));
    if (is_negation_free(c) || !generic) return generic;
    if (nulls_of(c).size() > options.null_limit) return false;
    return valid_by_enumeration(c);
}

bool cond_subsumes(const ConditionalTuple& a, const ConditionalTuple& b) {
    return condition_entails(a.cond, b.cond) && condition_entails(a.cond, c_tuple_eq(a.tuple, b.tuple));
}

bool ConditionalInstance::add(Atom fact, ConditionPtr cond) {
    if (!keys_.emplace(fact, to_string(cond)).second) return false;
    facts.push_back({std::move(fact), std::move(cond)});
    return true;
}

Instance ConditionalInstance::projection() const {
    Instance out;
    for (const auto& cf : facts) out.insert(cf.fact);
    return out;
}

std::set<Term> ConditionalInstance::nulls() const {
    std::set<Term> out;
    for (const auto& cf : facts) {
        for (const auto& t : cf.fact.args)
            if (t.is_null()) out.insert(t);
        auto n = nulls_of(cf.cond);
        out.insert(n.begin(), n.end());
    }
    return out;
}

std::set<Term> ConditionalInstance::constants() const {
    std::set<Term> out;
    for (const auto& cf : facts) {
        for (const auto& t : cf.fact.args)
            if (t.is_const()) out.insert(t);
        auto k = constants_of(cf.cond);
        out.insert(k.begin(), k.end());
    }
    return out;
}

std::string to_string(const ConditionalInstance& ci) {
    std::vector<std::string> lines;
    for (const auto& cf : ci.facts) {
        std::string line = to_string(cf.fact);
        if (cf.cond->kind != Condition::Kind::kTrue) line += " :: " + to_string(cf.cond);
        lines.push_back(line + ".\n");
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l;
    return out;
}

NormalTgd normalize_tgd(const Tgd& t) {
    NormalTgd n;
    n.id = t.id;
    n.head = t.head;
    n.frontier = t.frontier;
    n.existentials = t.existentials;

    std::set<std::string> names;
    auto note = [&](const std::vector<Atom>& atoms) {
        for (const auto& a : atoms)
            for (const auto& x : a.args)
                if (x.is_var()) names.insert(x.name());
    };
    note(t.body);
    note(t.head);
    auto unique = [&](const std::string& base) {
        for (int k = 2;; ++k) {
            std::string cand = base + "_" + std::to_string(k);
            if (names.insert(cand).second) return Term::variable(cand);
        }
    };

    std::set<Term> seen;
    for (const auto& a : t.body) {
        Atom out = a;
        for (auto& x : out.args) {
            if (x.is_var()) {
                if (seen.insert(x).second) continue;
                Term v = unique(x.name());
                n.eqs.emplace_back(v, x);
                x = v;
            } else {
                Term v = names.insert("v").second ? Term::variable("v") : unique("v");
                n.eqs.emplace_back(v, x);
                x = v;
            }
        }
        n.linear_body.push_back(std::move(out));
    }
    return n;
}

namespace {

using CondIndex = std::map<Atom, std::vector<ConditionPtr>>;

std::vector<ConditionPtr> cond_set_indexed(const NormalTgd& rho, const Homomorphism& h, const CondIndex& index) {
    std::vector<ConditionPtr> base;
    for (const auto& [v, u] : rho.eqs) base.push_back(c_eq(apply_to(h, v), apply_to(h, u)));
    std::vector<const std::vector<ConditionPtr>*> supports;
    for (const auto& a : rho.linear_body) {
        auto it = index.find(apply_to(h, a));
        if (it == index.end()) return {};
        supports.push_back(&it->second);
    }
    std::vector<ConditionPtr> out;
    std::vector<ConditionPtr> cur = base;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == supports.size()) {
            out.push_back(c_and(cur));
            return;
        }
        for (const auto& c : *supports[i]) {
            cur.push_back(c);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Term> body_order(const NormalTgd& rho) {
    std::vector<Term> vars;
    for (const auto& a : rho.linear_body)
        for (const auto& x : a.args) vars.push_back(x);
    return vars;
}

}  // namespace

std::vector<ConditionPtr> cond_set(const NormalTgd& rho, const Homomorphism& h, const ConditionalInstance& ci) {
    CondIndex index;
    for (const auto& cf : ci.facts) index[cf.fact].push_back(cf.cond);
    return cond_set_indexed(rho, h, index);
}

ConditionalChaseResult conditional_chase(const Setting& setting, const Instance& source,
                                         const ConditionalChaseOptions& options) {
    if (!setting.egds().empty())
        throw UsageError("the conditional chase does not handle EGDs; rewrite the query first");

    std::vector<NormalTgd> tgds;
    for (const auto& t : setting.all_tgds()) tgds.push_back(normalize_tgd(t));
    std::size_t cap = options.step_cap ? *options.step_cap : 8 * default_step_cap(setting, source);

    ConditionalInstance ci;
    CondIndex index;
    Instance proj;
    auto add = [&](const Atom& fact, const ConditionPtr& cond) {
        if (ci.add(fact, cond)) {
            index[fact].push_back(cond);
            proj.insert(fact);
        }
    };
    for (const auto& f : source) add(f, c_true());

    std::vector<std::vector<ConditionalTuple>> history(tgds.size());
    std::size_t steps = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < tgds.size(); ++i) {
            const auto& rho = tgds[i];
            auto order = body_order(rho);
            auto homs = find_homomorphisms(rho.linear_body, proj);
            std::sort(homs.begin(), homs.end(), [&](const Homomorphism& a, const Homomorphism& b) {
                return apply_to(a, order) < apply_to(b, order);
            });
            for (const auto& h : homs) {
                for (const auto& phi : cond_set_indexed(rho, h, index)) {
                    if (!condition_consistent(phi)) continue;
                    ConditionalTuple step{apply_to(h, rho.frontier), phi};
                    bool subsumed = std::any_of(history[i].begin(), history[i].end(),
                                                [&](const ConditionalTuple& p) { return cond_subsumes(step, p); });
                    if (subsumed) continue;
                    if (++steps > cap)
                        throw CapExceeded("conditional chase exceeded the step cap of " + std::to_string(cap) +
                                          " steps");
                    Homomorphism ext = h;
                    for (const auto& z : rho.existentials) ext[z] = Term::fresh_null();
                    if (options.trace)
                        options.trace->push_back("fire " + rho.id + " " + to_string(step.tuple) + " :: " +
                                                 to_string(phi));
                    for (const auto& a : rho.head) add(apply_to(ext, a), phi);
                    history[i].push_back(std::move(step));
                    changed = true;
                }
            }
        }
    }

    ConditionalChaseResult result;
    result.steps = steps;
    for (const auto& cf : ci.facts)
        if (setting.target.contains(cf.fact.relation)) result.result.add(cf.fact, cf.cond);
    return result;
}

Worlds possible_worlds(const ConditionalInstance& ci, const WorldOptions& options) {
    auto nulls_set = ci.nulls();
    std::vector<Term> nulls(nulls_set.begin(), nulls_set.end());
    std::set<Term> pool = ci.constants();
    pool.insert(options.constants.begin(), options.constants.end());

    Worlds w;
    std::size_t n = options.fresh_count ? *options.fresh_count : nulls.size();
    for (std::size_t k = 1; w.fresh.size() < n; ++k) {
        Term f = Term::constant("w" + std::to_string(k));
        if (!pool.contains(f)) w.fresh.push_back(f);
    }

    auto visit = [&](const std::map<Term, Term>& nu) {
        Instance world;
        for (const auto& cf : ci.facts) {
            if (!evaluate_condition(cf.cond, nu)) continue;
            Atom a = cf.fact;
            for (auto& t : a.args) t = value(t, nu);
            world.insert(a);
        }
        w.worlds.insert(std::move(world));
        return true;
    };
    std::vector<Term> consts(pool.begin(), pool.end());
    if (options.canonical) {
        for_each_valuation(nulls, consts, w.fresh, visit);
    } else {
        consts.insert(consts.end(), w.fresh.begin(), w.fresh.end());
        for_each_valuation(nulls, consts, std::vector<Term>{}, visit);
    }
    return w;
}

std::set<Tuple> conditional_certain_exact(const ConditionalInstance& ci, const Query& q,
                                          const CertainOptions& options) {
    WorldOptions wo;
    wo.constants = options.constants;
    auto qc = constants_of(q);
    wo.constants.insert(qc.begin(), qc.end());
    wo.constants.insert(options.extra_domain.begin(), options.extra_domain.end());
    wo.fresh_count = options.fresh_count;
    auto worlds = possible_worlds(ci, wo);

    std::optional<std::set<Tuple>> acc;
    for (const auto& world : worlds.worlds) {
        auto ans = evaluate(q, world, options.extra_domain);
        if (!acc) {
            acc = std::move(ans);
        } else {
            std::set<Tuple> keep;
            std::set_intersection(acc->begin(), acc->end(), ans.begin(), ans.end(),
                                  std::inserter(keep, keep.end()));
            acc = std::move(keep);
        }
        if (acc->empty()) break;
    }
    std::set<Tuple> out;
    if (!acc) return out;
    std::set<Term> fresh(worlds.fresh.begin(), worlds.fresh.end());
    for (const auto& t : *acc)
        if (std::none_of(t.begin(), t.end(), [&](const Term& x) { return fresh.contains(x); })) out.insert(t);
    return out;
}

namespace {

class SymbolicEvaluator {
public:
    SymbolicEvaluator(const ConditionalInstance& ci, const std::set<Term>& extra) : ci_(ci), extra_(extra) {
        for (const auto& cf : ci.facts) {
            by_relation_[cf.fact.relation].push_back(&cf);
            for (const auto& t : cf.fact.args) domain_.insert(t);
        }
        domain_.insert(extra.begin(), extra.end());
    }

    const std::set<Term>& domain() const { return domain_; }

    ConditionPtr present(const Term& u) {
        auto it = present_.find(u);
        if (it != present_.end()) return it->second;
        std::vector<ConditionPtr> ds;
        for (const auto& c : extra_) ds.push_back(c_eq(u, c));
        for (const auto& cf : ci_.facts) {
            std::set<Term> seen;
            for (const auto& v : cf.fact.args)
                if (seen.insert(v).second) ds.push_back(c_and({cf.cond, c_eq(v, u)}));
        }
        auto c = c_or(std::move(ds));
        present_[u] = c;
        return c;
    }

    ConditionPtr sem(const FormulaPtr& f, std::map<Term, Term>& env) {
        using FK = Formula::Kind;
        auto val = [&](const Term& t) {
            if (!t.is_var()) return t;
            return env.at(t);
        };
        switch (f->kind) {
            case FK::kTrue: return c_true();
            case FK::kFalse: return c_false();
            case FK::kEq: return c_eq(val(f->lhs), val(f->rhs));
            case FK::kAtom: {
                Tuple args;
                for (const auto& t : f->atom.args) args.push_back(val(t));
                std::vector<ConditionPtr> ds;
                auto it = by_relation_.find(f->atom.relation);
                if (it != by_relation_.end())
                    for (const auto* cf : it->second) {
                        auto eq = c_tuple_eq(cf->fact.args, args);
                        if (eq->kind != Condition::Kind::kFalse) ds.push_back(c_and({cf->cond, eq}));
                    }
                return c_or(std::move(ds));
            }
            case FK::kNot: return c_not(sem(f->children[0], env));
            case FK::kAnd:
            case FK::kOr: {
                std::vector<ConditionPtr> cs;
                for (const auto& ch : f->children) {
                    auto c = sem(ch, env);
                    if (f->kind == FK::kAnd && c->kind == Condition::Kind::kFalse) return c;
                    if (f->kind == FK::kOr && c->kind == Condition::Kind::kTrue) return c;
                    cs.push_back(std::move(c));
                }
                return f->kind == FK::kAnd ? c_and(std::move(cs)) : c_or(std::move(cs));
            }
            case FK::kExists:
            case FK::kForall: {
                bool ex = f->kind == FK::kExists;
                auto saved = env.find(f->var) == env.end() ? std::optional<Term>{} : env.at(f->var);
                std::vector<ConditionPtr> cs;
                for (const auto& u : domain_) {
                    env[f->var] = u;
                    auto body = sem(f->children[0], env);
                    auto c = ex ? c_and({present(u), body}) : c_or({c_not(present(u)), body});
                    if (ex && c->kind == Condition::Kind::kTrue) {
                        cs = {c};
                        break;
                    }
                    if (!ex && c->kind == Condition::Kind::kFalse) {
                        cs = {c};
                        break;
                    }
                    cs.push_back(std::move(c));
                }
                if (saved) env[f->var] = *saved;
                else env.erase(f->var);
                return ex ? c_or(std::move(cs)) : c_and(std::move(cs));
            }
        }
        return c_false();
    }

private:
    const ConditionalInstance& ci_;
    std::set<Term> extra_;
    std::set<Term> domain_;
    std::map<Symbol, std::vector<const ConditionalFact*>> by_relation_;
    std::map<Term, ConditionPtr> present_;
};

}  // namespace

std::set<Tuple> conditional_certain_approx(const ConditionalInstance& ci, const Query& q,
                                           const CertainOptions& options) {
    SymbolicEvaluator ev(ci, options.extra_domain);
    std::vector<Term> candidates;
    for (const auto& t : ev.domain())
        if (t.is_const()) candidates.push_back(t);

    std::set<Tuple> out;
    Tuple tuple(q.arity());
    std::map<Term, Term> env;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == q.arity()) {
            std::vector<ConditionPtr> cs;
            for (const auto& t : tuple) cs.push_back(ev.present(t));
            cs.push_back(ev.sem(q.formula, env));
            if (condition_valid(c_and(std::move(cs)), options.validity)) out.insert(tuple);
            return;
        }
        for (const auto& c : candidates) {
            tuple[i] = c;
            env[q.head[i]] = c;
            rec(i + 1);
        }
        env.erase(q.head[i]);
    };
    rec(0);
    return out;
}

}  // namespace dex
