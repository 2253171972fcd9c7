#pragma once

#include <map>
#include <ranges>
#include <set>
#include <string>
#include <vector>

#include "dex/term.hpp"

namespace dex {

/// Relation name to arity.
using Schema = std::map<Symbol, std::size_t>;

struct Position {
    Symbol relation;
    std::size_t index = 0;  // 1-based

    friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& p);

struct Atom {
    Symbol relation;
    std::vector<Term> args;

    Atom() = default;
    Atom(Symbol rel, std::vector<Term> a) : relation(rel), args(std::move(a)) {}
    Atom(std::string_view rel, std::vector<Term> a) : relation(rel), args(std::move(a)) {}

    std::size_t arity() const noexcept { return args.size(); }
    bool is_fact() const noexcept;  // no variables
    bool has_nulls() const noexcept;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept;
};

std::string to_string(const Atom& a);

/// Ordering that lets a bare relation symbol select the contiguous block of
/// facts over that relation inside a std::set<Atom>.
struct AtomOrder {
    using is_transparent = void;
    bool operator()(const Atom& a, const Atom& b) const noexcept { return a < b; }
    bool operator()(const Atom& a, Symbol r) const noexcept { return a.relation < r; }
    bool operator()(Symbol r, const Atom& a) const noexcept { return r < a.relation; }
};

/// A finite set of facts.
class Instance {
public:
    using Storage = std::set<Atom, AtomOrder>;
    using const_iterator = Storage::const_iterator;

    Instance() = default;
    Instance(std::initializer_list<Atom> facts);
    explicit Instance(std::vector<Atom> facts);

    /// Returns true when the fact was not present. Throws on atoms with
    /// variables.
    bool insert(const Atom& fact);
    void insert_all(const Instance& other);
    bool erase(const Atom& fact) { return facts_.erase(fact) > 0; }
    bool contains(const Atom& fact) const { return facts_.contains(fact); }

    std::size_t size() const noexcept { return facts_.size(); }
    bool empty() const noexcept { return facts_.empty(); }
    const_iterator begin() const noexcept { return facts_.begin(); }
    const_iterator end() const noexcept { return facts_.end(); }

    /// Facts over one relation, in order.
    std::ranges::subrange<const_iterator> facts_of(Symbol relation) const;

    std::set<Term> adom() const;
    std::set<Term> constants() const;
    std::set<Term> nulls() const;
    bool has_nulls() const;

    Instance restricted_to(const Schema& schema) const;
    Instance united(const Instance& other) const;
    bool is_subset_of(const Instance& other) const;

    friend bool operator==(const Instance&, const Instance&) = default;
    friend bool operator<(const Instance& a, const Instance& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    Storage facts_;
};

std::string to_string(const Instance& inst);

}  // namespace dex
