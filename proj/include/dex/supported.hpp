#pragma once

#include <optional>
#include <set>
#include <vector>

#include "dex/dependency.hpp"
#include "dex/query.hpp"

namespace dex {

/// The constants a search may use: `base` holds every constant of the
/// setting, source and query (plus any user additions); `fresh` are
/// constants that occur nowhere else.
struct ConstantBudget {
    std::set<Term> base;
    std::vector<Term> fresh;

    std::set<Term> all() const;
    bool is_fresh(const Term& t) const;
};

/// Steps of the classical chase times the largest number of existential
/// variables in one TGD (0 when the chase fails before any step).
std::size_t default_fresh_count(const Setting& setting, const Instance& source);

/// Fresh constants are named c1, c2, ... skipping names already in base.
ConstantBudget make_budget(const Setting& setting, const Instance& source, const Query* q,
                           std::optional<std::size_t> fresh_count = std::nullopt,
                           const std::set<Term>& extra_base = {});

struct EnumerationOptions {
    /// Canonical mode keeps one representative per permutation class of
    /// fresh constants (c_{k+1} only once c_1..c_k are used). Complete mode
    /// emits every solution over the budget.
    bool complete = false;
    /// Search-node cap; 0 means unlimited.
    std::size_t node_cap = 0;
};

struct EnumerationResult {
    std::set<Instance> solutions;
    /// Some branch wanted a fresh constant beyond the budget, so solutions
    /// needing more fresh values are missing.
    bool fresh_exhausted = false;
    std::size_t nodes = 0;
};

EnumerationResult enumerate_supported_solutions(const Setting& setting, const Instance& source,
                                                const ConstantBudget& budget,
                                                const EnumerationOptions& options = {});

struct CertainResult {
    Answers answers;
    bool fresh_exhausted = false;
};

/// Intersection of q over every budget-restricted supported solution
/// (exact for the budget, fresh constants included).
CertainResult supported_certain_answers(const Setting& setting, const Instance& source, const Query& q,
                                        const ConstantBudget& budget, const EnumerationOptions& options = {});

/// Removes tuples that mention a fresh constant of the budget.
std::set<Tuple> drop_fresh_tuples(const std::set<Tuple>& tuples, const ConstantBudget& budget);

/// Chase success for weakly-acyclic settings; budgeted enumeration
/// otherwise.
bool exists_supported_solution(const Setting& setting, const Instance& source);

}  // namespace dex
