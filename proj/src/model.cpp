#include "dex/model.hpp"

#include <algorithm>
#include <set>

#include "dex/error.hpp"

namespace dex {

bool satisfies_tgd(const Instance& inst, const Tgd& tgd) {
    bool ok = true;
    for_each_homomorphism(tgd.body, inst, {}, [&](const Homomorphism& h) {
        Homomorphism frontier;
        for (const auto& v : tgd.frontier) frontier.emplace(v, h.at(v));
        if (!has_homomorphism(tgd.head, inst, frontier)) ok = false;
        return ok;
    });
    return ok;
}

bool satisfies_egd(const Instance& inst, const Egd& egd) {
    bool ok = true;
    for_each_homomorphism(egd.body, inst, {}, [&](const Homomorphism& h) {
        ok = h.at(egd.lhs) == h.at(egd.rhs);
        return ok;
    });
    return ok;
}

bool satisfies(const Instance& inst, const TargetDependency& dep) {
    return std::visit(
        [&](const auto& d) {
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Tgd>)
                return satisfies_tgd(inst, d);
            else
                return satisfies_egd(inst, d);
        },
        dep);
}

bool is_classical_solution(const Setting& setting, const Instance& source, const Instance& candidate) {
    check_instance(source, setting.source, "source instance");
    check_instance(candidate, setting.target, "target instance");
    Instance both = source.united(candidate);
    for (const auto& t : setting.st_tgds)
        if (!satisfies_tgd(both, t)) return false;
    for (const auto& d : setting.t_deps)
        if (!satisfies(candidate, d)) return false;
    return true;
}

namespace {

// Depth-first search for an ex-choice. Every derived fact must stay inside
// `allowed` (source plus candidate); existential values are taken from head
// witnesses inside the candidate.
class SupportSearch {
public:
    SupportSearch(const Setting& setting, const Instance& source, const Instance& candidate)
        : tgds_(setting.all_tgds()), candidate_(candidate), allowed_(source.united(candidate)) {}

    std::optional<ExChoice> run(const Instance& source) {
        Instance cur = source;
        ExChoice gamma;
        if (search(cur, gamma)) return result_;
        return std::nullopt;
    }

private:
    bool add_all(Instance& cur, const std::vector<Atom>& atoms) {
        for (const auto& a : atoms) {
            if (!allowed_.contains(a)) return false;
            cur.insert(a);
        }
        return true;
    }

    // Saturate the existential-free TGDs plus already chosen triggers.
    bool saturate(Instance& cur, const ExChoice& gamma) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : tgds_) {
                std::vector<Atom> derived;
                for_each_homomorphism(t.body, cur, {}, [&](const Homomorphism& h) {
                    Homomorphism g;
                    for (const auto& v : t.frontier) g.emplace(v, h.at(v));
                    if (t.has_existentials()) {
                        auto it = gamma.choices.find(std::make_pair(t.id, apply_to(g, t.frontier)));
                        if (it == gamma.choices.end()) return true;
                        for (const auto& [z, c] : it->second) g.emplace(z, c);
                    }
                    for (const auto& a : t.head) {
                        Atom f = apply_to(g, a);
                        if (!cur.contains(f)) derived.push_back(std::move(f));
                    }
                    return true;
                });
                if (!derived.empty()) {
                    if (!add_all(cur, derived)) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    std::optional<std::pair<const Tgd*, Tuple>> open_trigger(const Instance& cur, const ExChoice& gamma) {
        for (const auto& t : tgds_) {
            if (!t.has_existentials()) continue;
            std::optional<Tuple> found;
            for_each_homomorphism(t.body, cur, {}, [&](const Homomorphism& h) {
                Tuple fr;
                for (const auto& v : t.frontier) fr.push_back(h.at(v));
                if (!gamma.choices.contains(std::make_pair(t.id, fr))) {
                    found = fr;
                    return false;
                }
                return true;
            });
            if (found) return std::make_pair(&t, *found);
        }
        return std::nullopt;
    }

    bool search(Instance cur, ExChoice gamma) {
        if (!saturate(cur, gamma)) return false;
        auto trigger = open_trigger(cur, gamma);
        if (!trigger) {
            if (!(cur == allowed_)) return false;
            result_ = gamma;
            return true;
        }
        const Tgd& t = *trigger->first;
        Homomorphism fr;
        for (std::size_t i = 0; i < t.frontier.size(); ++i) fr.emplace(t.frontier[i], trigger->second[i]);
        std::set<std::map<Term, Term>> witnesses;
        for_each_homomorphism(t.head, candidate_, fr, [&](const Homomorphism& h) {
            std::map<Term, Term> w;
            for (const auto& z : t.existentials) w.emplace(z, h.at(z));
            witnesses.insert(std::move(w));
            return true;
        });
        for (const auto& w : witnesses) {
            ExChoice next = gamma;
            next.choices.emplace(std::make_pair(t.id, trigger->second), w);
            if (search(cur, std::move(next))) return true;
        }
        return false;
    }

    std::vector<Tgd> tgds_;
    const Instance& candidate_;
    Instance allowed_;
    ExChoice result_;
};

}  // namespace

std::optional<ExChoice> find_supporting_choice(const Setting& setting, const Instance& source,
                                               const Instance& candidate) {
    check_instance(source, setting.source, "source instance");
    check_instance(candidate, setting.target, "target instance");
    if (candidate.has_nulls()) return std::nullopt;
    for (const auto& e : setting.egds())
        if (!satisfies_egd(candidate, e)) return std::nullopt;
    SupportSearch search(setting, source, candidate);
    return search.run(source);
}

bool is_supported_solution(const Setting& setting, const Instance& source, const Instance& candidate) {
    return find_supporting_choice(setting, source, candidate).has_value();
}

std::optional<Instance> least_fixpoint(const Setting& setting, const Instance& source,
                                       const ExChoice& gamma) {
    auto tgds = setting.all_tgds();
    Instance cur = source;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : tgds) {
            std::vector<Atom> derived;
            bool missing = false;
            for_each_homomorphism(t.body, cur, {}, [&](const Homomorphism& h) {
                Homomorphism g;
                for (const auto& v : t.frontier) g.emplace(v, h.at(v));
                if (t.has_existentials()) {
                    auto it = gamma.choices.find(std::make_pair(t.id, apply_to(g, t.frontier)));
                    if (it == gamma.choices.end()) {
                        missing = true;
                        return false;
                    }
                    for (const auto& [z, c] : it->second) g.emplace(z, c);
                }
                for (const auto& a : t.head) derived.push_back(apply_to(g, a));
                return true;
            });
            if (missing) return std::nullopt;
            for (const auto& a : derived) changed |= cur.insert(a);
        }
    }
    return cur.restricted_to(setting.target);
}

}  // namespace dex
