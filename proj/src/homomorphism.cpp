#include "dex/homomorphism.hpp"

#include <algorithm>
#include <set>

namespace dex {

namespace {

// Greedy join order: next atom is the one with the most already-bound
// positions, ties broken by fewer candidate facts.
std::vector<std::size_t> plan(const std::vector<Atom>& body, const Instance& target,
                              const Homomorphism& initial) {
    std::set<Term> bound;
    for (const auto& [k, v] : initial) bound.insert(k);
    std::vector<std::size_t> order;
    std::vector<bool> used(body.size(), false);
    for (std::size_t step = 0; step < body.size(); ++step) {
        std::size_t best = body.size();
        long best_score = -1;
        std::size_t best_size = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (used[i]) continue;
            long score = 0;
            for (const auto& t : body[i].args)
                if (!t.is_var() || bound.contains(t)) ++score;
            auto range = target.facts_of(body[i].relation);
            std::size_t size = static_cast<std::size_t>(std::distance(range.begin(), range.end()));
            if (best == body.size() || score > best_score ||
                (score == best_score && size < best_size)) {
                best = i;
                best_score = score;
                best_size = size;
            }
        }
        used[best] = true;
        order.push_back(best);
        for (const auto& t : body[best].args)
            if (t.is_var()) bound.insert(t);
    }
    return order;
}

class Matcher {
public:
    Matcher(const std::vector<Atom>& body, const Instance& target,
            const std::function<bool(const Homomorphism&)>& visit)
        : body_(body), target_(target), visit_(visit) {}

    bool run(Homomorphism& h, const std::vector<std::size_t>& order, std::size_t depth) {
        if (depth == order.size()) return visit_(h);
        const Atom& atom = body_[order[depth]];
        for (const Atom& fact : target_.facts_of(atom.relation)) {
            if (fact.arity() != atom.arity()) continue;
            std::vector<Term> added;
            bool ok = true;
            for (std::size_t i = 0; i < atom.arity() && ok; ++i) {
                const Term& t = atom.args[i];
                if (!t.is_var()) {
                    ok = t == fact.args[i];
                    continue;
                }
                auto it = h.find(t);
                if (it == h.end()) {
                    h.emplace(t, fact.args[i]);
                    added.push_back(t);
                } else {
                    ok = it->second == fact.args[i];
                }
            }
            bool cont = true;
            if (ok) cont = run(h, order, depth + 1);
            for (const auto& v : added) h.erase(v);
            if (!cont) return false;
        }
        return true;
    }

private:
    const std::vector<Atom>& body_;
    const Instance& target_;
    const std::function<bool(const Homomorphism&)>& visit_;
};

}  // namespace

void for_each_homomorphism(const std::vector<Atom>& body, const Instance& target,
                           const Homomorphism& initial,
                           const std::function<bool(const Homomorphism&)>& visit) {
    Homomorphism h = initial;
    for (const auto& a : body)
        for (const auto& t : a.args)
            if (!t.is_var()) h.emplace(t, t);
    Matcher m(body, target, visit);
    m.run(h, plan(body, target, initial), 0);
}

std::vector<Homomorphism> find_homomorphisms(const std::vector<Atom>& body, const Instance& target,
                                             const Homomorphism& initial) {
    std::vector<Homomorphism> out;
    for_each_homomorphism(body, target, initial, [&](const Homomorphism& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

bool has_homomorphism(const std::vector<Atom>& body, const Instance& target,
                      const Homomorphism& initial) {
    bool found = false;
    for_each_homomorphism(body, target, initial, [&](const Homomorphism&) {
        found = true;
        return false;
    });
    return found;
}

Term apply_to(const Homomorphism& h, const Term& t) {
    auto it = h.find(t);
    return it == h.end() ? t : it->second;
}

Atom apply_to(const Homomorphism& h, const Atom& a) {
    return Atom(a.relation, apply_to(h, a.args));
}

Tuple apply_to(const Homomorphism& h, const std::vector<Term>& terms) {
    Tuple out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(apply_to(h, t));
    return out;
}

std::string to_string(const Homomorphism& h) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : h) {
        if (!first) out += ", ";
        first = false;
        out += to_string(k) + "->" + to_string(v);
    }
    return out + "}";
}

}  // namespace dex
