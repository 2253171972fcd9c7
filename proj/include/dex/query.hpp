#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dex/instance.hpp"

namespace dex {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { kTrue, kFalse, kAtom, kEq, kNot, kAnd, kOr, kExists, kForall };

    Kind kind = Kind::kTrue;
    Atom atom;                       // kAtom
    Term lhs, rhs;                   // kEq
    Term var;                        // kExists, kForall
    std::vector<FormulaPtr> children;  // kNot (1), kAnd/kOr (n), quantifiers (1)
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_atom(Atom a);
FormulaPtr f_eq(Term a, Term b);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_exists(Term v, FormulaPtr f);
FormulaPtr f_forall(Term v, FormulaPtr f);
FormulaPtr f_exists(const std::vector<Term>& vs, FormulaPtr f);
FormulaPtr f_forall(const std::vector<Term>& vs, FormulaPtr f);

std::set<Term> free_variables(const FormulaPtr& f);
std::set<Term> constants_of(const FormulaPtr& f);
bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

struct Query {
    std::vector<Term> head;
    FormulaPtr formula;

    std::size_t arity() const noexcept { return head.size(); }
    bool is_boolean() const noexcept { return head.empty(); }

    /// Throws SchemaError unless free(formula) = set(head) and head
    /// variables are distinct.
    static Query make(std::vector<Term> head, FormulaPtr formula);
};

std::set<Term> constants_of(const Query& q);

/// Result of a certain-answer computation. `no_solutions` marks the
/// vacuous case where the intersection ranges over nothing.
struct Answers {
    bool no_solutions = false;
    std::set<Tuple> tuples;

    friend bool operator==(const Answers&, const Answers&) = default;
};

/// Active-domain evaluation. Quantifiers and head variables range over
/// adom(inst) plus `extra_domain`.
std::set<Tuple> evaluate(const Query& q, const Instance& inst, const std::set<Term>& extra_domain = {});
bool holds(const FormulaPtr& f, const Instance& inst, const std::set<Term>& extra_domain = {});

/// Only atoms, conjunction, disjunction, existential quantification and
/// the constants true/false.
bool is_positive(const Query& q);
bool is_positive(const FormulaPtr& f);

std::set<Tuple> drop_null_tuples(const std::set<Tuple>& answers);

}  // namespace dex
