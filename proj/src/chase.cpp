#include "dex/chase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "dex/error.hpp"
#include "dex/model.hpp"

namespace dex {

std::size_t default_step_cap(const Setting& setting, const Instance& source) {
    std::size_t positions = 0;
    for (const auto& [rel, arity] : setting.target) positions += arity;
    auto tgds = setting.all_tgds();
    std::size_t max_frontier = 0;
    for (const auto& t : tgds) max_frontier = std::max(max_frontier, t.frontier.size());
    auto dom = source.adom();
    auto consts = setting.constants();
    dom.insert(consts.begin(), consts.end());
    double cap = static_cast<double>(positions) *
                 std::pow(static_cast<double>(dom.size() + 1), static_cast<double>(max_frontier)) *
                 static_cast<double>(tgds.size());
    cap = std::max(cap, 1000.0);
    if (cap > 1e15) return std::numeric_limits<std::size_t>::max() / 2;
    return static_cast<std::size_t>(cap);
}

namespace {

class Chaser {
public:
    Chaser(const Setting& setting, const ChaseOptions& options, std::size_t cap)
        : tgds_(setting.all_tgds()), egds_(setting.egds()), options_(options), cap_(cap) {}

    ChaseResult run(const Instance& source, const Schema& target) {
        cur_ = source;
        ChaseResult res;
        if (!apply_egds(res)) return res;
        bool fired = true;
        while (fired) {
            fired = false;
            for (const auto& t : tgds_) {
                std::vector<Tuple> triggers;
                for_each_homomorphism(t.body, cur_, {}, [&](const Homomorphism& h) {
                    Tuple fr;
                    for (const auto& v : t.frontier) fr.push_back(h.at(v));
                    triggers.push_back(std::move(fr));
                    return true;
                });
                std::sort(triggers.begin(), triggers.end());
                triggers.erase(std::unique(triggers.begin(), triggers.end()), triggers.end());
                for (auto fr : triggers) {
                    // Earlier merges in this round may have renamed nulls.
                    for (auto& x : fr) x = resolve(x);
                    if (!done_.insert({t.id, fr}).second) continue;
                    if (steps_ >= cap_)
                        throw CapExceeded("chase exceeded the step cap of " + std::to_string(cap_) +
                                          " (is the setting weakly acyclic?)");
                    ++steps_;
                    fire(t, fr);
                    fired = true;
                    if (!apply_egds(res)) {
                        res.steps = steps_;
                        return res;
                    }
                }
            }
        }
        res.success = true;
        res.steps = steps_;
        res.universal = cur_.restricted_to(target);
        return res;
    }

private:
    Term resolve(Term t) const {
        for (auto it = merged_.find(t); it != merged_.end(); it = merged_.find(t)) t = it->second;
        return t;
    }

    void fire(const Tgd& t, const Tuple& fr) {
        Homomorphism g;
        for (std::size_t i = 0; i < t.frontier.size(); ++i) g.emplace(t.frontier[i], fr[i]);
        for (const auto& z : t.existentials) g.emplace(z, Term::fresh_null());
        for (const auto& a : t.head) cur_.insert(apply_to(g, a));
        if (options_.trace) options_.trace->push_back("fire " + t.id + " " + to_string(fr));
    }

    // Returns false on a hard violation (two distinct constants).
    bool apply_egds(ChaseResult& res) {
        for (;;) {
            bool merged = false;
            for (const auto& e : egds_) {
                std::optional<std::pair<Term, Term>> clash;
                Homomorphism witness;
                for_each_homomorphism(e.body, cur_, {}, [&](const Homomorphism& h) {
                    const Term& a = h.at(e.lhs);
                    const Term& b = h.at(e.rhs);
                    if (a == b) return true;
                    clash = {a, b};
                    witness = h;
                    return false;
                });
                if (!clash) continue;
                auto [a, b] = *clash;
                if (a.is_const() && b.is_const()) {
                    res.success = false;
                    res.failed_egd = e.id;
                    res.witness = witness;
                    return false;
                }
                // Replace `from` by `to`: nulls yield to constants, younger
                // nulls to older ones.
                Term from = a, to = b;
                if (a.is_const() || (a.is_null() && b.is_null() && a.null_id() < b.null_id())) std::swap(from, to);
                substitute(from, to);
                merged = true;
                break;
            }
            if (!merged) return true;
        }
    }

    void substitute(const Term& from, const Term& to) {
        if (options_.trace) options_.trace->push_back("merge " + to_string(from) + " " + to_string(to));
        merged_[from] = to;
        Instance next;
        for (const auto& f : cur_) {
            Atom g = f;
            for (auto& x : g.args)
                if (x == from) x = to;
            next.insert(g);
        }
        cur_ = std::move(next);
        std::set<std::pair<std::string, Tuple>> done;
        for (auto key : done_) {
            for (auto& x : key.second)
                if (x == from) x = to;
            done.insert(std::move(key));
        }
        done_ = std::move(done);
    }

    std::vector<Tgd> tgds_;
    std::vector<Egd> egds_;
    const ChaseOptions& options_;
    std::size_t cap_;
    Instance cur_;
    std::set<std::pair<std::string, Tuple>> done_;
    std::map<Term, Term> merged_;
    std::size_t steps_ = 0;
};

}  // namespace

ChaseResult chase(const Setting& setting, const Instance& source, const ChaseOptions& options) {
    check_instance(source, setting.source, "source instance");
    std::size_t cap = options.step_cap.value_or(default_step_cap(setting, source));
    Chaser c(setting, options, cap);
    return c.run(source, setting.target);
}

Answers certain_answers_positive(const Setting& setting, const Instance& source, const Query& q,
                                 const ChaseOptions& options) {
    if (!is_positive(q))
        throw UsageError("classical certain answers via the chase require a positive query "
                         "(atoms, &, |, exists only)");
    ChaseResult r = chase(setting, source, options);
    Answers out;
    if (!r.success) {
        out.no_solutions = true;
        return out;
    }
    out.tuples = drop_null_tuples(evaluate(q, r.universal));
    return out;
}

}  // namespace dex
