#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dex/dependency.hpp"
#include "dex/homomorphism.hpp"
#include "dex/query.hpp"

namespace dex {

struct Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

/// Boolean combination of equalities between constants and nulls.
struct Condition {
    enum class Kind { kTrue, kFalse, kEq, kAnd, kOr, kNot, kImplies };

    Kind kind = Kind::kTrue;
    Term lhs, rhs;
    std::vector<ConditionPtr> children;
};

// The constructors simplify: constant equalities are decided, nested
// conjunctions/disjunctions are flattened and true/false absorbed.
ConditionPtr c_true();
ConditionPtr c_false();
ConditionPtr c_eq(const Term& a, const Term& b);
ConditionPtr c_and(std::vector<ConditionPtr> cs);
ConditionPtr c_or(std::vector<ConditionPtr> cs);
ConditionPtr c_not(ConditionPtr c);
ConditionPtr c_implies(ConditionPtr a, ConditionPtr b);
ConditionPtr c_tuple_eq(const Tuple& a, const Tuple& b);

std::string to_string(const ConditionPtr& c);
std::set<Term> nulls_of(const ConditionPtr& c);
std::set<Term> constants_of(const ConditionPtr& c);
bool is_negation_free(const ConditionPtr& c);

/// The equalities of a condition that is `true`, one equality or a
/// conjunction of equalities.
std::optional<std::vector<std::pair<Term, Term>>> equality_conjunction(const ConditionPtr& c);

/// Truth under a valuation of the nulls (nulls missing from `nu` are
/// treated as themselves).
bool evaluate_condition(const ConditionPtr& c, const std::map<Term, Term>& nu);

/// Calls `visit` once per equality pattern of `nulls` over `constants`
/// plus fresh constants (each new fresh value is the next unused one).
/// Stops when `visit` returns false.
void for_each_valuation(const std::vector<Term>& nulls, const std::vector<Term>& constants,
                        const std::function<bool(const std::map<Term, Term>&)>& visit);
/// Same, drawing fresh values from `fresh` in order; patterns that would
/// need more fresh values than supplied are skipped.
void for_each_valuation(const std::vector<Term>& nulls, const std::vector<Term>& constants,
                        const std::vector<Term>& fresh,
                        const std::function<bool(const std::map<Term, Term>&)>& visit);

bool condition_consistent(const ConditionPtr& c);
bool condition_entails(const ConditionPtr& c, const ConditionPtr& d);

struct ValidityOptions {
    /// General conditions with more nulls than this are reported invalid
    /// (sound for certain answers) instead of being enumerated.
    std::size_t null_limit = 8;
};

bool condition_valid(const ConditionPtr& c, const ValidityOptions& options = {});

struct ConditionalTuple {
    Tuple tuple;
    ConditionPtr cond;
};

/// <t,phi> is subsumed by <u,psi>: phi |= psi and phi |= t = u.
bool cond_subsumes(const ConditionalTuple& a, const ConditionalTuple& b);

struct ConditionalFact {
    Atom fact;
    ConditionPtr cond;
};

struct ConditionalInstance {
    std::vector<ConditionalFact> facts;

    /// Adds the pair unless an identical one is present.
    bool add(Atom fact, ConditionPtr cond);
    Instance projection() const;
    std::set<Term> nulls() const;
    std::set<Term> constants() const;
    std::size_t size() const noexcept { return facts.size(); }

private:
    std::set<std::pair<Atom, std::string>> keys_;
};

/// One `fact :: condition` line per conditional fact.
std::string to_string(const ConditionalInstance& ci);

struct NormalTgd {
    std::string id;
    std::vector<Atom> linear_body;
    std::vector<std::pair<Term, Term>> eqs;  // (fresh variable, variable or constant)
    std::vector<Atom> head;
    std::vector<Term> frontier;
    std::vector<Term> existentials;
};

NormalTgd normalize_tgd(const Tgd& t);

/// h(eqs) conjoined with one supporting condition per body atom, for every
/// choice of supporting conditional facts.
std::vector<ConditionPtr> cond_set(const NormalTgd& rho, const Homomorphism& h, const ConditionalInstance& ci);

struct ConditionalChaseOptions {
    std::optional<std::size_t> step_cap;
    std::vector<std::string>* trace = nullptr;
};

struct ConditionalChaseResult {
    ConditionalInstance result;  // target facts only
    std::size_t steps = 0;
};

/// Throws UsageError when the setting has EGDs and CapExceeded past the
/// step cap.
ConditionalChaseResult conditional_chase(const Setting& setting, const Instance& source,
                                         const ConditionalChaseOptions& options = {});

struct WorldOptions {
    /// Constants a valuation may use besides those of the instance.
    std::set<Term> constants;
    /// Number of fresh constants; defaults to the number of nulls.
    std::optional<std::size_t> fresh_count;
    /// One valuation per equality pattern instead of every valuation.
    bool canonical = true;
};

struct Worlds {
    std::set<Instance> worlds;
    std::vector<Term> fresh;
};

Worlds possible_worlds(const ConditionalInstance& ci, const WorldOptions& options = {});

struct CertainOptions {
    /// Added to the valuation constants (e.g. the setting's and query's).
    std::set<Term> constants;
    /// Extra values the query's variables range over besides the active
    /// domain of each world.
    std::set<Term> extra_domain;
    std::optional<std::size_t> fresh_count;
    ValidityOptions validity;
};

/// Intersection of q over the possible worlds; tuples with fresh constants
/// are dropped since no renaming-invariant answer contains them.
std::set<Tuple> conditional_certain_exact(const ConditionalInstance& ci, const Query& q,
                                          const CertainOptions& options = {});

/// Polynomial-size symbolic evaluation: for each candidate tuple builds the
/// condition under which it is an answer and keeps it when that condition
/// is valid. Always a subset of the exact answers.
std::set<Tuple> conditional_certain_approx(const ConditionalInstance& ci, const Query& q,
                                           const CertainOptions& options = {});

}  // namespace dex
