#include "doctest.h"

#include "dex/dsl.hpp"
#include "dex/error.hpp"

using namespace dex;

TEST_CASE("settings parse with ids and existentials") {
    auto s = parse_setting(read_file(DEX_DATA_DIR "/ex1/setting.dex"));
    CHECK(s.st_tgds.size() == 2);
    CHECK(s.t_deps.empty());
    auto s2 = parse_setting(read_file(DEX_DATA_DIR "/ex2/setting.dex"));
    CHECK(s2.st_tgds.size() == 2);
    CHECK(s2.t_deps.size() == 2);
    CHECK(s2.st_tgds[0].existentials == std::vector<Term>{Term::variable("z")});
    CHECK(s2.egds().size() == 1);
}

TEST_CASE("semantic errors carry a location") {
    CHECK_THROWS_AS(parse_setting("source R/1. target R/1."), ParseError);
    CHECK_THROWS_AS(parse_setting("source R/1. target S/1.\nst: R(x) -> S(y)."), ParseError);
    CHECK_THROWS_AS(parse_setting("source R/1. target S/1.\nst: U(x) -> S(x)."), ParseError);
    try {
        parse_setting("source R/1.\ntarget S/1.\nst: R(x) -> S(x,x).");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("instances") {
    Schema ord{{Symbol("Ord"), 2}};
    auto i = parse_instance("Ord(1,\"yes\"). Ord(2,\"no\").", ord);
    CHECK(i == Instance{Atom("Ord", {Term::constant("1"), Term::constant("yes")}),
                        Atom("Ord", {Term::constant("2"), Term::constant("no")})});
    CHECK(parse_instance("", ord).empty());
    CHECK_THROWS_AS(parse_instance("Ord(1).", ord), ParseError);
    CHECK_THROWS_AS(parse_instance("Ord(x, 1).", ord), ParseError);
    CHECK_THROWS_AS(parse_instance("Ord(_1, 1).", ord), ParseError);
}

TEST_CASE("queries") {
    Schema t{{Symbol("AllOrd"), 1}, {Symbol("Paid"), 1}, {Symbol("V"), 1}};
    auto q = parse_query("Q(x) := AllOrd(x) & !Paid(x).", t);
    CHECK(q.arity() == 1);
    CHECK(parse_query("Q() := exists x. V(x).", t).is_boolean());
    CHECK_THROWS_AS(parse_query("Q(x) := exists y. V(y).", t), ParseError);
    CHECK_THROWS_AS(parse_query("Q(x) := V(x) &", t), ParseError);
}

TEST_CASE("printing round-trips") {
    for (const char* name : {"ex1", "ex2", "ex4", "threecol"}) {
        auto text = read_file(std::string(DEX_DATA_DIR) + "/" + name + "/setting.dex");
        auto s = parse_setting(text);
        auto again = parse_setting(to_string(s));
        CHECK(to_string(again) == to_string(s));
    }
    Schema t{{Symbol("EmpC"), 2}, {Symbol("SameC"), 2}};
    auto q = parse_query("Q(x,x2) := exists y. exists y2. EmpC(x,y) & EmpC(x2,y2) & !SameC(x,x2).", t);
    auto q2 = parse_query(to_string(q), t);
    CHECK(structurally_equal(q.formula, q2.formula));
    auto q3 = parse_query("Q(x) := forall y. (EmpC(x,y) -> y = \"a\") | x != \"b\".", t);
    CHECK(structurally_equal(parse_query(to_string(q3), t).formula, q3.formula));
}
