#include "support/oracles.hpp"

#include <algorithm>

namespace oracle {

namespace {

Term value(const Term& t, const std::map<Term, Term>& s) {
    auto it = s.find(t);
    return it == s.end() ? t : it->second;
}

void match_rec(const std::vector<Atom>& body, std::size_t i, const Instance& inst, std::map<Term, Term>& s,
               std::vector<std::map<Term, Term>>& out) {
    if (i == body.size()) {
        out.push_back(s);
        return;
    }
    for (const auto& f : inst) {
        if (f.relation != body[i].relation || f.arity() != body[i].arity()) continue;
        auto saved = s;
        bool ok = true;
        for (std::size_t k = 0; k < f.arity() && ok; ++k) {
            const Term& t = body[i].args[k];
            if (!t.is_var()) {
                ok = t == f.args[k];
            } else if (auto it = s.find(t); it != s.end()) {
                ok = it->second == f.args[k];
            } else {
                s[t] = f.args[k];
            }
        }
        if (ok) match_rec(body, i + 1, inst, s, out);
        s = std::move(saved);
    }
}

}  // namespace

std::vector<std::map<Term, Term>> matches(const std::vector<Atom>& body, const Instance& inst,
                                          const std::map<Term, Term>& fixed) {
    std::vector<std::map<Term, Term>> out;
    auto s = fixed;
    match_rec(body, 0, inst, s, out);
    return out;
}

Atom substitute(const Atom& a, const std::map<Term, Term>& s) {
    Atom out = a;
    for (auto& t : out.args) t = value(t, s);
    return out;
}

bool satisfies_all(const dex::Setting& setting, const Instance& source, const Instance& target) {
    Instance all = source.united(target);
    for (const auto& t : setting.all_tgds()) {
        for (const auto& m : matches(t.body, all)) {
            bool found = false;
            // Look for any extension of m over the head.
            found = !matches(t.head, all, m).empty();
            if (!found) return false;
        }
    }
    for (const auto& e : setting.egds())
        for (const auto& m : matches(e.body, all))
            if (value(e.lhs, m) != value(e.rhs, m)) return false;
    return true;
}

void for_each_instance(const dex::Schema& schema, const std::vector<Term>& domain,
                       const std::function<bool(const Instance&)>& visit) {
    std::vector<Atom> facts;
    for (const auto& [rel, arity] : schema) {
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
            std::vector<Term> args;
            for (auto k : idx) args.push_back(domain[k]);
            facts.emplace_back(rel, args);
            std::size_t p = 0;
            while (p < arity && ++idx[p] == domain.size()) idx[p++] = 0;
            if (p == arity) break;
        }
    }
    if (facts.size() > 24) throw std::runtime_error("oracle: too many candidate facts");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << facts.size()); ++mask) {
        Instance inst;
        for (std::size_t i = 0; i < facts.size(); ++i)
            if (mask >> i & 1) inst.insert(facts[i]);
        if (!visit(inst)) return;
    }
}

std::vector<Instance> classical_solutions(const dex::Setting& setting, const Instance& source,
                                          const std::vector<Term>& domain) {
    std::vector<Instance> out;
    for_each_instance(setting.target, domain, [&](const Instance& j) {
        if (satisfies_all(setting, source, j)) out.push_back(j);
        return true;
    });
    return out;
}

std::optional<bool> is_supported(const dex::Setting& setting, const Instance& source, const Instance& target,
                                 std::size_t limit) {
    if (!satisfies_all(setting, source, target)) return false;
    Instance all = source.united(target);
    auto tgds = setting.all_tgds();

    // (tgd index, frontier values) -> candidate witnesses inside `all`.
    struct Trigger {
        std::size_t tgd;
        std::map<Term, Term> frontier;
        std::vector<std::map<Term, Term>> witnesses;
    };
    std::vector<Trigger> triggers;
    for (std::size_t i = 0; i < tgds.size(); ++i) {
        const auto& t = tgds[i];
        if (!t.has_existentials()) continue;
        std::set<std::map<Term, Term>> seen;
        for (const auto& m : matches(t.body, all)) {
            std::map<Term, Term> fr;
            for (const auto& x : t.frontier) fr[x] = m.at(x);
            if (!seen.insert(fr).second) continue;
            Trigger tr{i, fr, {}};
            std::set<std::map<Term, Term>> ws;
            for (const auto& ext : matches(t.head, all, fr)) {
                std::map<Term, Term> w;
                for (const auto& z : t.existentials) w[z] = ext.at(z);
                ws.insert(w);
            }
            tr.witnesses.assign(ws.begin(), ws.end());
            triggers.push_back(std::move(tr));
        }
    }
    double combos = 1;
    for (const auto& tr : triggers) combos *= static_cast<double>(tr.witnesses.size());
    if (combos > static_cast<double>(limit)) return std::nullopt;

    std::vector<std::size_t> pick(triggers.size(), 0);
    for (;;) {
        // Least fixpoint from the source under this choice.
        Instance cur = source;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < tgds.size(); ++i) {
                for (const auto& m : matches(tgds[i].body, cur)) {
                    std::map<Term, Term> s = m;
                    if (tgds[i].has_existentials()) {
                        std::map<Term, Term> fr;
                        for (const auto& x : tgds[i].frontier) fr[x] = m.at(x);
                        bool found = false;
                        for (std::size_t k = 0; k < triggers.size(); ++k) {
                            if (triggers[k].tgd == i && triggers[k].frontier == fr) {
                                for (const auto& [z, c] : triggers[k].witnesses[pick[k]]) s[z] = c;
                                found = true;
                            }
                        }
                        if (!found) goto next_choice;  // derives a trigger outside `all`
                    }
                    for (const auto& h : tgds[i].head)
                        if (cur.insert(substitute(h, s))) changed = true;
                }
            }
        }
        if (cur == all) return true;
    next_choice:
        std::size_t p = 0;
        while (p < pick.size() && ++pick[p] == triggers[p].witnesses.size()) pick[p++] = 0;
        if (p == pick.size()) return false;
    }
}

bool holds(const dex::FormulaPtr& f, const Instance& inst, const std::set<Term>& domain,
           std::map<Term, Term>& env) {
    using K = dex::Formula::Kind;
    switch (f->kind) {
        case K::kTrue: return true;
        case K::kFalse: return false;
        case K::kAtom: return inst.contains(substitute(f->atom, env));
        case K::kEq: return value(f->lhs, env) == value(f->rhs, env);
        case K::kNot: return !holds(f->children[0], inst, domain, env);
        case K::kAnd:
            for (const auto& c : f->children)
                if (!holds(c, inst, domain, env)) return false;
            return true;
        case K::kOr:
            for (const auto& c : f->children)
                if (holds(c, inst, domain, env)) return true;
            return false;
        case K::kExists:
        case K::kForall: {
            bool ex = f->kind == K::kExists;
            auto saved = env.find(f->var) != env.end() ? std::optional<Term>(env.at(f->var)) : std::nullopt;
            bool result = !ex;
            for (const auto& d : domain) {
                env[f->var] = d;
                if (holds(f->children[0], inst, domain, env) == ex) {
                    result = ex;
                    break;
                }
            }
            if (saved) env[f->var] = *saved;
            else env.erase(f->var);
            return result;
        }
    }
    return false;
}

std::set<Tuple> evaluate(const dex::Query& q, const Instance& inst, const std::set<Term>& extra) {
    std::set<Term> domain = extra;
    for (const auto& f : inst)
        for (const auto& t : f.args) domain.insert(t);
    std::vector<Term> dom(domain.begin(), domain.end());
    std::set<Tuple> out;
    std::vector<std::size_t> idx(q.arity(), 0);
    if (!q.is_boolean() && dom.empty()) return out;
    for (;;) {
        std::map<Term, Term> env;
        Tuple t;
        for (std::size_t i = 0; i < q.arity(); ++i) {
            env[q.head[i]] = dom[idx[i]];
            t.push_back(dom[idx[i]]);
        }
        if (holds(q.formula, inst, domain, env)) out.insert(t);
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == dom.size()) idx[p++] = 0;
        if (p == idx.size()) break;
    }
    return out;
}

std::set<Tuple> intersect_over(const std::vector<Instance>& instances, const dex::Query& q) {
    std::optional<std::set<Tuple>> acc;
    for (const auto& j : instances) {
        auto ans = oracle::evaluate(q, j);
        if (!acc) {
            acc = ans;
            continue;
        }
        std::set<Tuple> keep;
        for (const auto& t : *acc)
            if (ans.contains(t)) keep.insert(t);
        acc = keep;
    }
    return acc.value_or(std::set<Tuple>{});
}

bool weakly_acyclic(const dex::Setting& setting) {
    using Pos = std::pair<dex::Symbol, std::size_t>;
    std::map<Pos, std::set<Pos>> normal, special;
    for (const auto& t : setting.target_tgds()) {
        for (const auto& b : t.body) {
            for (std::size_t i = 0; i < b.arity(); ++i) {
                const Term& x = b.args[i];
                if (!x.is_var()) continue;
                bool in_head = false;
                for (const auto& h : t.head)
                    for (const auto& y : h.args) in_head |= y == x;
                if (!in_head) continue;
                for (const auto& h : t.head) {
                    for (std::size_t j = 0; j < h.arity(); ++j) {
                        if (h.args[j] == x) normal[{b.relation, i}].insert({h.relation, j});
                        if (std::find(t.existentials.begin(), t.existentials.end(), h.args[j]) !=
                            t.existentials.end())
                            special[{b.relation, i}].insert({h.relation, j});
                    }
                }
            }
        }
    }
    auto reaches = [&](const Pos& from, const Pos& to) {
        std::set<Pos> seen{from};
        std::vector<Pos> stack{from};
        while (!stack.empty()) {
            Pos p = stack.back();
            stack.pop_back();
            if (p == to) return true;
            for (const auto* g : {&normal, &special}) {
                auto it = g->find(p);
                if (it == g->end()) continue;
                for (const auto& q : it->second)
                    if (seen.insert(q).second) stack.push_back(q);
            }
        }
        return false;
    };
    for (const auto& [u, vs] : special)
        for (const auto& v : vs)
            if (reaches(v, u)) return false;
    return true;
}

}  // namespace oracle
