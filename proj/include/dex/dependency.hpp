#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dex/instance.hpp"

namespace dex {

/// body -> exists existentials. head
///
/// The frontier is vars(body) ∩ vars(head), ordered by first occurrence in
/// the head. Existentials keep their declaration order. Frontier tuples are
/// always built in this order.
struct Tgd {
    std::string id;
    std::vector<Atom> body;
    std::vector<Atom> head;
    std::vector<Term> existentials;
    std::vector<Term> frontier;

    /// Validates the shape and computes the frontier. Throws SchemaError
    /// when the body is empty, nulls occur, an existential appears in the
    /// body or not in the head, or a head variable is neither frontier nor
    /// existential.
    static Tgd make(std::string id, std::vector<Atom> body, std::vector<Atom> head,
                    std::vector<Term> existentials);

    bool has_existentials() const noexcept { return !existentials.empty(); }
    std::set<Term> body_variables() const;
};

/// body -> lhs = rhs
struct Egd {
    std::string id;
    std::vector<Atom> body;
    Term lhs;
    Term rhs;

    static Egd make(std::string id, std::vector<Atom> body, Term lhs, Term rhs);
};

using TargetDependency = std::variant<Tgd, Egd>;

struct Setting {
    Schema source;
    Schema target;
    std::vector<Tgd> st_tgds;
    std::vector<TargetDependency> t_deps;

    std::vector<Tgd> target_tgds() const;
    std::vector<Egd> egds() const;
    /// Source-to-target TGDs followed by target TGDs, in declaration order.
    std::vector<Tgd> all_tgds() const;
    bool is_tgd_only() const;
    /// Constants mentioned by any dependency.
    std::set<Term> constants() const;
    Schema combined_schema() const;
    /// Copy of this setting with every EGD removed.
    Setting without_egds() const;

    /// Checks schema disjointness, relation usage and arities.
    void validate() const;
};

std::string to_string(const Tgd& t);
std::string to_string(const Egd& e);
std::string to_string(const Setting& s);

/// Throws SchemaError unless every fact is over `schema` with the declared
/// arity.
void check_instance(const Instance& inst, const Schema& schema, const std::string& what);

}  // namespace dex
