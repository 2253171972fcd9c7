#pragma once

#include <set>
#include <vector>

#include "dex/conditional.hpp"
#include "dex/dependency.hpp"
#include "dex/query.hpp"

namespace dex {

/// forall x. (!body | lhs = rhs): true on J iff J satisfies e.
Query egd_holds_query(const Egd& e);

/// x occurs somewhere in a fact over `schema`.
FormulaPtr adom_formula(const Term& x, const Schema& schema);

/// adom membership or equality with one of `extra`.
FormulaPtr dom_formula(const Term& x, const std::set<Term>& extra, const Schema& schema);

/// Arity-k query returning every k-tuple over adom(J) plus `extra`, with
/// head variables x1..xk.
Query dom_query(std::size_t k, const std::set<Term>& extra, const Schema& schema);

struct RewrittenQuery {
    Query q1;
    Query q2;
    Query combined;
};

/// q1 = q & every EGD holds, q2 = dom & some EGD fails. The copy of q in q1
/// is guarded by active-domain membership so that, evaluated with `extra`
/// as extra domain, it still agrees with q under plain semantics.
RewrittenQuery rewrite_with_egds(const Query& q, const std::vector<Egd>& egds, const Schema& schema,
                                 const std::set<Term>& extra);

/// Conditional chase of the EGD-free setting followed by the symbolic
/// evaluation of the rewritten query.
Answers approx_answers_with_egds(const Setting& setting, const Instance& source, const Query& q,
                                 const CertainOptions& options = {});

}  // namespace dex
