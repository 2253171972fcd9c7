#include "dex/supported.hpp"

#include <algorithm>
#include <map>

#include "dex/analysis.hpp"
#include "dex/chase.hpp"
#include "dex/error.hpp"
#include "dex/homomorphism.hpp"
#include "dex/model.hpp"

namespace dex {

std::set<Term> ConstantBudget::all() const {
    std::set<Term> out = base;
    out.insert(fresh.begin(), fresh.end());
    return out;
}

bool ConstantBudget::is_fresh(const Term& t) const {
    return std::find(fresh.begin(), fresh.end(), t) != fresh.end();
}

std::size_t default_fresh_count(const Setting& setting, const Instance& source) {
    std::size_t max_ex = 0;
    for (const auto& t : setting.all_tgds()) max_ex = std::max(max_ex, t.existentials.size());
    if (max_ex == 0) return 0;
    ChaseResult r = chase(setting, source);
    return r.steps * max_ex;
}

ConstantBudget make_budget(const Setting& setting, const Instance& source, const Query* q,
                           std::optional<std::size_t> fresh_count, const std::set<Term>& extra_base) {
    ConstantBudget b;
    b.base = setting.constants();
    auto src = source.constants();
    b.base.insert(src.begin(), src.end());
    if (q) {
        auto qc = constants_of(*q);
        b.base.insert(qc.begin(), qc.end());
    }
    b.base.insert(extra_base.begin(), extra_base.end());
    std::size_t m = fresh_count ? *fresh_count : default_fresh_count(setting, source);
    for (std::size_t i = 1; b.fresh.size() < m; ++i) {
        Term c = Term::constant("c" + std::to_string(i));
        if (!b.base.contains(c)) b.fresh.push_back(c);
    }
    return b;
}

namespace {

class Enumerator {
public:
    Enumerator(const Setting& setting, const ConstantBudget& budget, const EnumerationOptions& options)
        : tgds_(setting.all_tgds()),
          egds_(setting.egds()),
          target_(setting.target),
          base_(budget.base.begin(), budget.base.end()),
          fresh_(budget.fresh),
          options_(options) {}

    EnumerationResult run(const Instance& source) {
        search(source, {}, 0);
        return std::move(result_);
    }

private:
    using Chosen = std::set<std::pair<std::size_t, Tuple>>;

    void add_head(Instance& cur, const Tgd& t, const Homomorphism& g) {
        for (const auto& a : t.head) cur.insert(apply_to(g, a));
    }

    // Fixpoint of the existential-free TGDs. Chosen triggers already had
    // their heads added when they were chosen.
    void saturate(Instance& cur) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : tgds_) {
                if (t.has_existentials()) continue;
                std::vector<Atom> derived;
                for_each_homomorphism(t.body, cur, {}, [&](const Homomorphism& h) {
                    for (const auto& a : t.head) {
                        Atom f = apply_to(h, a);
                        if (!cur.contains(f)) derived.push_back(std::move(f));
                    }
                    return true;
                });
                for (const auto& f : derived) changed |= cur.insert(f);
            }
        }
    }

    bool egds_hold(const Instance& cur) const {
        for (const auto& e : egds_)
            if (!satisfies_egd(cur, e)) return false;
        return true;
    }

    std::optional<std::pair<std::size_t, Tuple>> open_trigger(const Instance& cur, const Chosen& chosen) const {
        for (std::size_t i = 0; i < tgds_.size(); ++i) {
            const Tgd& t = tgds_[i];
            if (!t.has_existentials()) continue;
            std::optional<Tuple> best;
            for_each_homomorphism(t.body, cur, {}, [&](const Homomorphism& h) {
                Tuple fr;
                for (const auto& v : t.frontier) fr.push_back(h.at(v));
                if (!chosen.contains({i, fr}) && (!best || fr < *best)) best = std::move(fr);
                return true;
            });
            if (best) return std::make_pair(i, *best);
        }
        return std::nullopt;
    }

    void search(Instance cur, Chosen chosen, std::size_t used_fresh) {
        ++result_.nodes;
        if (options_.node_cap && result_.nodes > options_.node_cap)
            throw CapExceeded("supported-solution search exceeded " + std::to_string(options_.node_cap) + " nodes");
        saturate(cur);
        if (!egds_hold(cur)) return;
        auto trig = open_trigger(cur, chosen);
        if (!trig) {
            result_.solutions.insert(cur.restricted_to(target_));
            return;
        }
        const Tgd& t = tgds_[trig->first];
        chosen.insert(*trig);
        Homomorphism g;
        for (std::size_t i = 0; i < t.frontier.size(); ++i) g.emplace(t.frontier[i], trig->second[i]);
        assign(t, 0, g, cur, chosen, used_fresh);
    }

    void assign(const Tgd& t, std::size_t k, Homomorphism& g, const Instance& cur, const Chosen& chosen,
                std::size_t used_fresh) {
        if (k == t.existentials.size()) {
            Instance next = cur;
            add_head(next, t, g);
            search(std::move(next), chosen, used_fresh);
            return;
        }
        const Term& z = t.existentials[k];
        auto branch = [&](const Term& c, std::size_t used) {
            g[z] = c;
            assign(t, k + 1, g, cur, chosen, used);
            g.erase(z);
        };
        for (const auto& c : base_) branch(c, used_fresh);
        if (options_.complete) {
            for (const auto& c : fresh_) branch(c, used_fresh);
            return;
        }
        for (std::size_t i = 0; i < used_fresh; ++i) branch(fresh_[i], used_fresh);
        if (used_fresh < fresh_.size())
            branch(fresh_[used_fresh], used_fresh + 1);
        else
            result_.fresh_exhausted = true;
    }

    std::vector<Tgd> tgds_;
    std::vector<Egd> egds_;
    Schema target_;
    std::vector<Term> base_;
    std::vector<Term> fresh_;
    const EnumerationOptions& options_;
    EnumerationResult result_;
};

// All injective relabelings of the fresh constants occurring in t.
void relabelings(const Tuple& t, const ConstantBudget& budget, const std::function<bool(const Tuple&)>& visit) {
    std::vector<Term> occurring;
    for (const auto& x : t)
        if (budget.is_fresh(x) && std::find(occurring.begin(), occurring.end(), x) == occurring.end())
            occurring.push_back(x);
    std::map<Term, Term> m;
    std::set<Term> taken;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == occurring.size()) {
            Tuple u = t;
            for (auto& x : u)
                if (auto it = m.find(x); it != m.end()) x = it->second;
            return visit(u);
        }
        for (const auto& c : budget.fresh) {
            if (taken.contains(c)) continue;
            m[occurring[i]] = c;
            taken.insert(c);
            bool cont = rec(i + 1);
            taken.erase(c);
            m.erase(occurring[i]);
            if (!cont) return false;
        }
        return true;
    };
    rec(0);
}

}  // namespace

EnumerationResult enumerate_supported_solutions(const Setting& setting, const Instance& source,
                                                const ConstantBudget& budget,
                                                const EnumerationOptions& options) {
    check_instance(source, setting.source, "source instance");
    Enumerator e(setting, budget, options);
    return e.run(source);
}

CertainResult supported_certain_answers(const Setting& setting, const Instance& source, const Query& q,
                                        const ConstantBudget& budget, const EnumerationOptions& options) {
    EnumerationResult en = enumerate_supported_solutions(setting, source, budget, options);
    CertainResult out;
    out.fresh_exhausted = en.fresh_exhausted;
    if (en.solutions.empty()) {
        out.answers.no_solutions = true;
        return out;
    }
    bool first = true;
    for (const auto& j : en.solutions) {
        auto ans = evaluate(q, j);
        std::set<Tuple> keep;
        // Canonical solutions stand for all their fresh relabelings.
        for (const auto& t : ans) {
            if (!first && !out.answers.tuples.contains(t)) continue;
            bool all = true;
            if (!options.complete)
                relabelings(t, budget, [&](const Tuple& u) {
                    all = ans.contains(u);
                    return all;
                });
            if (all) keep.insert(t);
        }
        out.answers.tuples = std::move(keep);
        first = false;
        if (out.answers.tuples.empty()) break;
    }
    return out;
}

std::set<Tuple> drop_fresh_tuples(const std::set<Tuple>& tuples, const ConstantBudget& budget) {
    std::set<Tuple> out;
    for (const auto& t : tuples)
        if (std::none_of(t.begin(), t.end(), [&](const Term& x) { return budget.is_fresh(x); })) out.insert(t);
    return out;
}

bool exists_supported_solution(const Setting& setting, const Instance& source) {
    if (is_weakly_acyclic(setting)) return chase(setting, source).success;
    ConstantBudget b = make_budget(setting, source, nullptr, std::size_t{2});
    EnumerationOptions opts;
    opts.node_cap = 1000000;
    return !enumerate_supported_solutions(setting, source, b, opts).solutions.empty();
}

}  // namespace dex
