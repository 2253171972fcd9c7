#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dex/dependency.hpp"
#include "dex/query.hpp"
#include "dex/supported.hpp"

namespace dex {

struct Literal {
    enum class Kind { kAtom, kEq };

    Kind kind = Kind::kAtom;
    bool positive = true;
    Atom atom;
    Term lhs, rhs;

    static Literal pos(Atom a);
    static Literal neg(Atom a);
    static Literal eq(Term a, Term b);
    static Literal neq(Term a, Term b);

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// choice((X),(Y)): the derived consequences respect the functional
/// dependency X -> Y.
struct Choice {
    std::vector<Term> x;
    std::vector<Term> y;

    friend bool operator==(const Choice&, const Choice&) = default;
};

struct Rule {
    std::optional<Atom> head;  // empty for a constraint
    std::vector<Literal> body;
    std::optional<Choice> choice;
    /// Names the Range_/Chosen_/DiffChoice_ relations of a choice rule.
    std::string label;

    bool is_constraint() const noexcept { return !head.has_value(); }
    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Throws UsageError when a variable does not occur in a positive body
/// atom, or the choice sets are not disjoint body variables.
void check_rule(const Rule& r);

struct Program {
    std::vector<Rule> rules;
};

struct ExtensionalDB {
    std::vector<Atom> facts;
};

/// Rules per TGD (plain, or ExChoice choice rule plus propagation rules),
/// one constraint per EGD; Dom facts for every budget constant plus the
/// source facts. Throws UsageError on reserved relation names.
std::pair<Program, ExtensionalDB> translate_setting(const Setting& setting, const Instance& source,
                                                    const ConstantBudget& budget);

/// Range/Chosen/DiffChoice expansion; rules without choice are returned
/// unchanged.
std::vector<Rule> expand_choice(const Rule& r);
Program expand_choices(const Program& p);

struct GroundRule {
    int head = -1;  // -1 for a constraint
    std::vector<int> pos;
    std::vector<int> neg;
};

struct GroundProgram {
    std::vector<Atom> atoms;
    std::map<Atom, int> index;
    std::vector<GroundRule> rules;

    int intern(const Atom& a);
    int find(const Atom& a) const;
};

struct GroundOptions {
    /// All substitutions over the Herbrand universe instead of only those
    /// whose positive body is derivable.
    bool exhaustive = false;
    std::size_t rule_cap = 2000000;
};

/// Choice rules are expanded first. Equalities are decided while
/// grounding; rules with a false equality are dropped.
GroundProgram ground(const Program& p, const ExtensionalDB& ed, const GroundOptions& options = {});

GroundProgram reduct(const GroundProgram& g, const std::set<int>& m);
GroundProgram reduct(const GroundProgram& g, const Instance& m);

/// Least model of the definite rules; constraints are ignored.
std::set<int> least_model(const GroundProgram& g);

struct SolveOptions {
    GroundOptions ground;
    /// Search-node cap; 0 means unlimited.
    std::size_t node_cap = 0;
};

std::vector<std::set<int>> stable_models(const GroundProgram& g, const SolveOptions& options = {});
std::set<Instance> stable_models(const Program& p, const ExtensionalDB& ed, const SolveOptions& options = {});

/// Intersection of q over the target restrictions of all stable models;
/// no_solutions when there is none.
Answers cautious_answers(const ExtensionalDB& ed, const Query& q, const Program& p, const Schema& target,
                         const SolveOptions& options = {});
Answers cautious_answers(const std::set<Instance>& models, const Query& q, const Schema& target);

enum class AspDialect {
    kNative,  // relation names as declared, choice((X),(Y)) kept
    kClingo,  // relations prefixed with r_, choice rules expanded
};

std::string emit_program_text(const Program& p, const ExtensionalDB& ed, AspDialect dialect = AspDialect::kNative);

/// Runs `solver file 0`, reading `Answer:` blocks of clingo-dialect atoms.
std::set<Instance> external_stable_models(const Program& p, const ExtensionalDB& ed, const std::string& solver);

/// Parses the atoms of one answer line printed by a clingo-style solver.
std::vector<Atom> parse_answer_line(const std::string& line);

}  // namespace dex
