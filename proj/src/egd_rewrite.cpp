#include "dex/egd_rewrite.hpp"

#include "dex/supported.hpp"

namespace dex {

namespace {

FormulaPtr conj(const std::vector<Atom>& atoms) {
    std::vector<FormulaPtr> fs;
    for (const auto& a : atoms) fs.push_back(f_atom(a));
    return f_and(std::move(fs));
}

std::vector<Term> vars_of(const std::vector<Atom>& atoms) {
    std::vector<Term> out;
    for (const auto& a : atoms)
        for (const auto& t : a.args)
            if (t.is_var() && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return out;
}

FormulaPtr guard(const FormulaPtr& f, const Schema& schema) {
    using K = Formula::Kind;
    switch (f->kind) {
        case K::kExists:
            return f_exists(f->var, f_and({adom_formula(f->var, schema), guard(f->children[0], schema)}));
        case K::kForall:
            return f_forall(f->var, f_or({f_not(adom_formula(f->var, schema)), guard(f->children[0], schema)}));
        case K::kNot: return f_not(guard(f->children[0], schema));
        case K::kAnd:
        case K::kOr: {
            std::vector<FormulaPtr> cs;
            for (const auto& c : f->children) cs.push_back(guard(c, schema));
            return f->kind == K::kAnd ? f_and(std::move(cs)) : f_or(std::move(cs));
        }
        default: return f;
    }
}

}  // namespace

Query egd_holds_query(const Egd& e) {
    auto body = f_or({f_not(conj(e.body)), f_eq(e.lhs, e.rhs)});
    return Query::make({}, f_forall(vars_of(e.body), body));
}

FormulaPtr adom_formula(const Term& x, const Schema& schema) {
    std::vector<FormulaPtr> ds;
    for (const auto& [rel, arity] : schema) {
        for (std::size_t i = 0; i < arity; ++i) {
            std::vector<Term> args, others;
            for (std::size_t j = 0; j < arity; ++j) {
                if (j == i) {
                    args.push_back(x);
                    continue;
                }
                std::string name = "_p" + std::to_string(j);
                if (name == x.name()) name += "_";
                others.push_back(Term::variable(name));
                args.push_back(others.back());
            }
            ds.push_back(f_exists(others, f_atom(Atom(rel, args))));
        }
    }
    return f_or(std::move(ds));
}

FormulaPtr dom_formula(const Term& x, const std::set<Term>& extra, const Schema& schema) {
    std::vector<FormulaPtr> ds{adom_formula(x, schema)};
    for (const auto& c : extra) ds.push_back(f_eq(x, c));
    return f_or(std::move(ds));
}

Query dom_query(std::size_t k, const std::set<Term>& extra, const Schema& schema) {
    std::vector<Term> head;
    std::vector<FormulaPtr> cs;
    for (std::size_t i = 1; i <= k; ++i) {
        head.push_back(Term::variable("x" + std::to_string(i)));
        cs.push_back(dom_formula(head.back(), extra, schema));
    }
    return Query::make(std::move(head), f_and(std::move(cs)));
}

RewrittenQuery rewrite_with_egds(const Query& q, const std::vector<Egd>& egds, const Schema& schema,
                                 const std::set<Term>& extra) {
    std::vector<FormulaPtr> holds{guard(q.formula, schema)}, fails;
    for (const auto& x : q.head) holds.push_back(adom_formula(x, schema));
    for (const auto& e : egds) {
        auto h = egd_holds_query(e).formula;
        holds.push_back(h);
        fails.push_back(f_not(h));
    }
    std::vector<FormulaPtr> dom;
    for (const auto& x : q.head) dom.push_back(dom_formula(x, extra, schema));
    dom.push_back(f_or(std::move(fails)));

    auto q1 = Query::make(q.head, f_and(std::move(holds)));
    auto q2 = Query::make(q.head, f_and(std::move(dom)));
    auto combined = Query::make(q.head, f_or({q1.formula, q2.formula}));
    return {std::move(q1), std::move(q2), std::move(combined)};
}

Answers approx_answers_with_egds(const Setting& setting, const Instance& source, const Query& q,
                                 const CertainOptions& options) {
    Answers out;
    if (!exists_supported_solution(setting, source)) {
        out.no_solutions = true;
        return out;
    }
    auto ci = conditional_chase(setting.without_egds(), source).result;
    auto egds = setting.egds();
    if (egds.empty()) {
        out.tuples = conditional_certain_approx(ci, q, options);
        return out;
    }
    CertainOptions opts = options;
    opts.extra_domain = setting.constants();
    auto qc = constants_of(q);
    opts.extra_domain.insert(qc.begin(), qc.end());
    auto rq = rewrite_with_egds(q, egds, setting.target, opts.extra_domain);
    out.tuples = conditional_certain_approx(ci, rq.combined, opts);
    return out;
}

}  // namespace dex
