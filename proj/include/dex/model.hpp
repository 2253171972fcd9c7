#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dex/dependency.hpp"
#include "dex/homomorphism.hpp"

namespace dex {

/// Finite part of an ex-choice: for each triggered (TGD id, frontier tuple)
/// the constants given to the TGD's existential variables.
struct ExChoice {
    std::map<std::pair<std::string, Tuple>, std::map<Term, Term>> choices;
};

bool satisfies_tgd(const Instance& inst, const Tgd& tgd);
bool satisfies_egd(const Instance& inst, const Egd& egd);
bool satisfies(const Instance& inst, const TargetDependency& dep);

/// Throws SchemaError on schema violations.
bool is_classical_solution(const Setting& setting, const Instance& source, const Instance& candidate);

/// An ex-choice under which `candidate` is the least fixpoint from `source`
/// and satisfies the EGDs, if there is one.
std::optional<ExChoice> find_supporting_choice(const Setting& setting, const Instance& source,
                                               const Instance& candidate);

bool is_supported_solution(const Setting& setting, const Instance& source, const Instance& candidate);

/// Least fixpoint of the TGDs from `source` where existential variables
/// take the values fixed by `gamma`. Triggers missing from `gamma` are
/// reported through the return value being empty.
std::optional<Instance> least_fixpoint(const Setting& setting, const Instance& source,
                                       const ExChoice& gamma);

}  // namespace dex
