#include "dex/instance.hpp"

#include <algorithm>

#include "dex/error.hpp"

namespace dex {

std::string to_string(const Position& p) {
    return p.relation.str() + "[" + std::to_string(p.index) + "]";
}

bool Atom::is_fact() const noexcept {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_var(); });
}

bool Atom::has_nulls() const noexcept {
    return std::any_of(args.begin(), args.end(), [](const Term& t) { return t.is_null(); });
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
    if (auto c = a.relation <=> b.relation; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                  b.args.end());
}

std::string to_string(const Atom& a) {
    std::string out = a.relation.str() + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(a.args[i]);
    }
    out += ")";
    return out;
}

Instance::Instance(std::initializer_list<Atom> facts) {
    for (const auto& f : facts) insert(f);
}

Instance::Instance(std::vector<Atom> facts) {
    for (auto& f : facts) insert(f);
}

bool Instance::insert(const Atom& fact) {
    if (!fact.is_fact()) throw Error("instance facts may not contain variables: " + to_string(fact));
    return facts_.insert(fact).second;
}

void Instance::insert_all(const Instance& other) {
    facts_.insert(other.facts_.begin(), other.facts_.end());
}

std::ranges::subrange<Instance::const_iterator> Instance::facts_of(Symbol relation) const {
    auto [lo, hi] = facts_.equal_range(relation);
    return {lo, hi};
}

std::set<Term> Instance::adom() const {
    std::set<Term> out;
    for (const auto& f : facts_) out.insert(f.args.begin(), f.args.end());
    return out;
}

std::set<Term> Instance::constants() const {
    std::set<Term> out;
    for (const auto& f : facts_)
        for (const auto& t : f.args)
            if (t.is_const()) out.insert(t);
    return out;
}

std::set<Term> Instance::nulls() const {
    std::set<Term> out;
    for (const auto& f : facts_)
        for (const auto& t : f.args)
            if (t.is_null()) out.insert(t);
    return out;
}

bool Instance::has_nulls() const {
    return std::any_of(facts_.begin(), facts_.end(), [](const Atom& f) { return f.has_nulls(); });
}

Instance Instance::restricted_to(const Schema& schema) const {
    Instance out;
    for (const auto& f : facts_)
        if (schema.contains(f.relation)) out.facts_.insert(out.facts_.end(), f);
    return out;
}

Instance Instance::united(const Instance& other) const {
    Instance out = *this;
    out.insert_all(other);
    return out;
}

bool Instance::is_subset_of(const Instance& other) const {
    return std::includes(other.begin(), other.end(), begin(), end(), AtomOrder{});
}

std::string to_string(const Instance& inst) {
    std::string out;
    for (const auto& f : inst) {
        out += to_string(f);
        out += ".\n";
    }
    return out;
}

}  // namespace dex
