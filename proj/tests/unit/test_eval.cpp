#include "doctest.h"

#include <random>

#include "dex/dsl.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dex;

namespace {

Term c(const char* s) { return Term::constant(s); }

}  // namespace

TEST_CASE("evaluation of the orders query") {
    auto ex = support::load_example("ex1");
    Instance j{Atom("AllOrd", {c("1")}), Atom("AllOrd", {c("2")}), Atom("Paid", {c("1")})};
    CHECK(evaluate(ex.query, j) == std::set<Tuple>{support::tuple({"2"})});
    j.insert(Atom("Paid", {c("2")}));
    CHECK(evaluate(ex.query, j).empty());
    CHECK(evaluate(ex.query, Instance{}).empty());
}

TEST_CASE("positivity") {
    Schema r{{Symbol("R"), 2}};
    CHECK(is_positive(parse_query("Q(x) := exists y. R(x,y).", r)));
    CHECK_FALSE(is_positive(parse_query("Q(x) := forall y. R(x,y).", r)));
    CHECK_FALSE(is_positive(support::load_example("ex1").query));
}

TEST_CASE("drop_null_tuples") {
    std::set<Tuple> ts{{c("1")}, {Term::null(1)}};
    CHECK(drop_null_tuples(ts) == std::set<Tuple>{{c("1")}});
    CHECK(drop_null_tuples({}).empty());
    CHECK(drop_null_tuples({{c("a"), Term::null(1)}, {c("a"), c("b")}}) == std::set<Tuple>{{c("a"), c("b")}});
}

TEST_CASE("evaluation matches the textbook evaluator on random queries") {
    std::mt19937_64 rng(gen::seed());
    std::vector<Term> domain{c("a"), c("b"), c("c"), Term::null(1)};
    for (int i = 0; i < 300; ++i) {
        auto s = gen::weakly_acyclic_setting(rng);
        auto q = gen::fo_query(rng, s);
        auto j = gen::target_instance(rng, s, domain, 6);
        std::set<Term> extra;
        if (i % 3 == 0) extra.insert(c("d"));
        INFO(to_string(q));
        CHECK(evaluate(q, j, extra) == oracle::evaluate(q, j, extra));
    }
}
