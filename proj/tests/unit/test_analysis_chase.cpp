#include "doctest.h"

#include <random>

#include "dex/analysis.hpp"
#include "dex/chase.hpp"
#include "dex/dsl.hpp"
#include "dex/error.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dex;

namespace {

Term c(const char* s) { return Term::constant(s); }

Position pos(const char* r, std::size_t i) { return Position{Symbol(r), i}; }

}  // namespace

TEST_CASE("dependency graph of T(x,y) -> exists z. T(y,z)") {
    auto s = parse_setting(read_file(support::data_path("nonwa/setting.dex")));
    auto g = dependency_graph(s.target_tgds(), s.target);
    CHECK(g.special_edges.contains({pos("T", 2), pos("T", 2)}));
    CHECK(g.normal_edges.contains({pos("T", 2), pos("T", 1)}));
    CHECK_FALSE(is_weakly_acyclic(s));
    CHECK(to_dot(g).find("digraph") != std::string::npos);
}

TEST_CASE("dependency graph of the employee example") {
    auto s = parse_setting(read_file(support::data_path("ex2/setting.dex")));
    auto g = dependency_graph(s.target_tgds(), s.target);
    CHECK(g.special_edges.empty());
    CHECK(g.normal_edges.contains({pos("EmpC", 1), pos("SameC", 1)}));
    CHECK(g.normal_edges.contains({pos("EmpC", 1), pos("SameC", 2)}));
    CHECK(is_weakly_acyclic(s));
    CHECK(dependency_graph({}).normal_edges.empty());
    CHECK(is_weakly_acyclic(parse_setting("source S/2. target T/2. st: S(x,y) -> T(x,y). t: T(x,y) -> x = y.")));
}

TEST_CASE("weak acyclicity agrees with the definition on random settings") {
    std::mt19937_64 rng(gen::seed());
    std::vector<Term> vars{Term::variable("x"), Term::variable("y"), Term::variable("z")};
    const Term ex = Term::variable("e");
    int cyclic = 0, acyclic = 0;
    for (int i = 0; i < 300; ++i) {
        Setting s;
        s.source = {{Symbol("S"), 2}};
        s.target = {{Symbol("T"), 2}, {Symbol("U"), 2}};
        s.st_tgds.push_back(Tgd::make("st1", {Atom("S", {vars[0], vars[1]})}, {Atom("T", {vars[0], vars[1]})}, {}));
        std::uniform_int_distribution<int> pick(0, 2), rel(0, 1), count(1, 3);
        int n = count(rng);
        for (int k = 0; k < n; ++k) {
            const char* br = rel(rng) ? "T" : "U";
            const char* hr = rel(rng) ? "T" : "U";
            Term b0 = vars[pick(rng) % 2], b1 = vars[pick(rng) % 2];
            bool existential = rel(rng);
            Term h0 = b0;
            Term h1 = existential ? ex : b1;
            if (rel(rng)) std::swap(h0, h1);
            s.t_deps.push_back(Tgd::make("t" + std::to_string(k + 1), {Atom(br, {b0, b1})}, {Atom(hr, {h0, h1})},
                                         existential ? std::vector<Term>{ex} : std::vector<Term>{}));
        }
        bool wa = oracle::weakly_acyclic(s);
        (wa ? acyclic : cyclic)++;
        CHECK(is_weakly_acyclic(s) == wa);
    }
    CHECK(cyclic > 0);
    CHECK(acyclic > 0);
}

TEST_CASE("chase of the examples") {
    auto ex1 = support::load_example("ex1");
    auto r = chase(ex1.setting, ex1.source);
    REQUIRE(r.success);
    CHECK(r.universal == Instance{Atom("AllOrd", {c("1")}), Atom("AllOrd", {c("2")}), Atom("Paid", {c("1")})});

    auto ex2 = support::load_example("ex2");
    auto r2 = chase(ex2.setting, ex2.source);
    REQUIRE(r2.success);
    CHECK(r2.universal.nulls().size() == 1);
    CHECK(r2.universal.contains(Atom("EmpC", {c("john"), c("miami")})));
    CHECK(r2.universal.contains(Atom("SameC", {c("john"), c("john")})));
    CHECK_FALSE(r2.universal.contains(Atom("SameC", {c("john"), c("mary")})));
    CHECK(r2.universal.size() == 4);
    CHECK(oracle::satisfies_all(ex2.setting, ex2.source, r2.universal));
}

TEST_CASE("chase failure and trivial egds") {
    auto s = parse_setting("source S/2. target T/2. st: S(x,y) -> T(x,y). t: T(x,y) -> x = y.");
    auto src = parse_instance("S(\"a\",\"b\").", s.source);
    auto r = chase(s, src);
    CHECK_FALSE(r.success);
    CHECK(r.failed_egd == "t1");
    auto trivial = parse_setting("source S/1. target R/1. st: S(x) -> R(x). t: R(x) -> x = x.");
    CHECK(chase(trivial, parse_instance("S(\"a\").", trivial.source)).success);
}

TEST_CASE("chase step cap") {
    auto s = parse_setting(read_file(support::data_path("nonwa/setting.dex")));
    auto src = parse_instance(read_file(support::data_path("nonwa/source.facts")), s.source);
    CHECK_THROWS_AS(chase(s, src, {.step_cap = 50, .trace = nullptr}), CapExceeded);
}

TEST_CASE("certain answers of positive queries") {
    auto ex1 = support::load_example("ex1");
    auto q = parse_query("Q(x) := AllOrd(x).", ex1.setting.target);
    CHECK(certain_answers_positive(ex1.setting, ex1.source, q).tuples ==
          std::set<Tuple>{support::tuple({"1"}), support::tuple({"2"})});
    CHECK_THROWS_AS(certain_answers_positive(ex1.setting, ex1.source, ex1.query), UsageError);

    auto ex2 = support::load_example("ex2");
    auto q2 = parse_query("Q(x) := exists y. EmpC(x,y).", ex2.setting.target);
    CHECK(certain_answers_positive(ex2.setting, ex2.source, q2).tuples ==
          std::set<Tuple>{support::tuple({"john"}), support::tuple({"mary"})});
    CHECK(certain_answers_positive(ex2.setting, Instance{}, q2).tuples.empty());
}

TEST_CASE("the chase result is a solution on random settings") {
    std::mt19937_64 rng(gen::seed());
    for (int i = 0; i < 200; ++i) {
        auto s = gen::weakly_acyclic_setting(rng, {.egds = true});
        auto src = gen::source_instance(rng, s);
        auto r = chase(s, src);
        if (r.success) CHECK(oracle::satisfies_all(s, src, r.universal));
    }
}
