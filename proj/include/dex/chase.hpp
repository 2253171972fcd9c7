#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dex/dependency.hpp"
#include "dex/homomorphism.hpp"
#include "dex/query.hpp"

namespace dex {

struct ChaseOptions {
    /// Maximum number of TGD steps; default_step_cap() when unset.
    std::optional<std::size_t> step_cap;
    /// Receives `fire <id> <tuple>` and `merge <t> <u>` lines when set.
    std::vector<std::string>* trace = nullptr;
};

struct ChaseResult {
    bool success = false;
    /// Target facts of the chased instance (with nulls) on success.
    Instance universal;
    /// On failure, the EGD that tried to equate two distinct constants.
    std::string failed_egd;
    Homomorphism witness;
    std::size_t steps = 0;
};

/// |target positions| x (|adom(source)| + 1)^(max frontier arity) x |TGDs|,
/// never below 1000.
std::size_t default_step_cap(const Setting& setting, const Instance& source);

/// Semi-oblivious chase with eager EGD application. Throws CapExceeded
/// when the step cap is hit.
ChaseResult chase(const Setting& setting, const Instance& source, const ChaseOptions& options = {});

/// Null-free answers of a positive query on the chase result, or
/// no_solutions when the chase fails. Throws UsageError on non-positive q.
Answers certain_answers_positive(const Setting& setting, const Instance& source, const Query& q,
                                 const ChaseOptions& options = {});

}  // namespace dex
