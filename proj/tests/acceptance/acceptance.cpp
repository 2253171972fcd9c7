#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "dex/analysis.hpp"
#include "dex/chase.hpp"
#include "dex/conditional.hpp"
#include "dex/egd_rewrite.hpp"
#include "dex/error.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dex;
using support::tuple;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail.str("");
        if (!pass) detail << "; ";
        pass = false;
        detail << why;
    }
};

using Clock = std::chrono::steady_clock;

// Random settings whose solution space is too large to list are skipped and
// counted, not silently dropped.
constexpr std::size_t kNodeCap = 200000;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string show(const std::set<Tuple>& ts) {
    std::string out = "{";
    for (const auto& t : ts) out += (out.size() > 1 ? " " : "") + to_string(t);
    return out + "}";
}

std::string show(const Answers& a) { return a.no_solutions ? "no-solutions" : show(a.tuples); }

bool subset(const std::set<Tuple>& a, const std::set<Tuple>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<Term> constants_for(const Setting& s, const Instance& source, const Query& q) {
    auto out = s.constants();
    auto a = source.constants();
    auto b = constants_of(q);
    out.insert(a.begin(), a.end());
    out.insert(b.begin(), b.end());
    return out;
}

void c1(Outcome& o) {
    auto t0 = Clock::now();
    auto ex = support::load_example("ex1");
    auto budget = make_budget(ex.setting, ex.source, &ex.query);
    std::set<Tuple> expected{tuple({"2"})};
    auto exact = support::exact_answers(ex.setting, ex.source, ex.query, budget);
    auto asp = support::asp_answers(ex.setting, ex.source, ex.query, budget);
    auto approx = approx_answers_with_egds(ex.setting, ex.source, ex.query);
    if (exact.no_solutions || exact.tuples != expected) o.fail("exact gave " + show(exact));
    if (asp.no_solutions || asp.tuples != expected) o.fail("asp gave " + show(asp));
    if (approx.no_solutions || approx.tuples != expected) o.fail("approx gave " + show(approx));

    std::vector<Term> domain{Term::constant("1"), Term::constant("2"), Term::constant("yes"), Term::constant("no")};
    auto sols = oracle::classical_solutions(ex.setting, ex.source, domain);
    auto classical = oracle::intersect_over(sols, ex.query);
    if (!classical.empty()) o.fail("classical certain answers " + show(classical));
    double t = seconds_since(t0);
    if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
    if (o.pass)
        o.detail << "exact=asp=approx={2}; classical certain answers {} over " << sols.size()
                 << " bounded classical solutions; " << t << " s";
}

void c2(Outcome& o) {
    auto t0 = Clock::now();
    auto ex = support::load_example("ex2");
    auto budget = make_budget(ex.setting, ex.source, &ex.query, 1, {Term::constant("chicago")});
    auto exact = support::exact_answers(ex.setting, ex.source, ex.query, budget);
    auto asp = support::asp_answers(ex.setting, ex.source, ex.query, budget);
    if (exact.no_solutions || !exact.tuples.empty()) o.fail("exact gave " + show(exact));
    if (asp.no_solutions || !asp.tuples.empty()) o.fail("asp gave " + show(asp));

    auto sols = enumerate_supported_solutions(ex.setting, ex.source, budget, {.complete = true});
    auto emp = [](const char* who, const char* city) {
        return Atom("EmpC", {Term::constant(who), Term::constant(city)});
    };
    auto has_solution_with = [&](const char* mary_city) {
        for (const auto& j : sols.solutions) {
            Instance empc;
            for (const auto& f : j.facts_of(Symbol("EmpC"))) empc.insert(f);
            if (empc == Instance{emp("john", "miami"), emp("mary", mary_city)}) return true;
        }
        return false;
    };
    if (!has_solution_with("chicago")) o.fail("solution with mary in chicago missing");
    if (!has_solution_with("miami")) o.fail("solution with mary in miami missing");
    for (const auto& j : sols.solutions) {
        auto v = oracle::is_supported(ex.setting, ex.source, j);
        if (v && !*v) o.fail("oracle rejects enumerated solution:\n" + to_string(j));
    }
    double t = seconds_since(t0);
    if (t >= 5.0) o.fail("took " + std::to_string(t) + " s");
    if (o.pass)
        o.detail << "exact=asp={}; " << sols.solutions.size()
                 << " supported solutions include both listed ones; " << t << " s";
}

void c3(Outcome& o) {
    auto ex = support::load_example("ex2");
    auto budget = make_budget(ex.setting, ex.source, &ex.query, 1);
    auto [program, ed] = translate_setting(ex.setting, ex.source, budget);
    auto got = support::normalized_rules(emit_program_text(program, ed));
    auto want = support::normalized_rules(read_file(support::data_path("golden/ex2_program.lp")));
    if (got != want) {
        std::string g;
        for (const auto& r : got) g += "\n  " + r;
        o.fail("rules differ from golden:" + g);
    } else {
        o.detail << want.size() << " rules match the golden program";
    }
}

void c4(Outcome& o, std::mt19937_64& rng) {
    auto t0 = Clock::now();
    std::size_t trials = 0, mismatches = 0, oracle_checked = 0, solutions = 0, skipped = 0;
    for (std::size_t attempt = 0; trials < 220 && attempt < 600; ++attempt) {
        auto s = gen::weakly_acyclic_setting(rng, {.egds = attempt % 2 == 1});
        auto source = gen::source_instance(rng, s);
        auto q = gen::fo_query(rng, s);
        std::size_t fresh = attempt % 3;
        auto budget = make_budget(s, source, &q, fresh);
        std::set<Instance> enumerated, models;
        auto [program, ed] = translate_setting(s, source, budget);
        try {
            enumerated = enumerate_supported_solutions(s, source, budget, {.complete = true, .node_cap = kNodeCap})
                             .solutions;
            for (const auto& m : stable_models(program, ed, {.ground = {}, .node_cap = kNodeCap}))
                models.insert(m.restricted_to(s.target));
        } catch (const CapExceeded&) {
            ++skipped;
            continue;
        }
        ++trials;
        solutions += enumerated.size();
        bool bad = false;
        if (models != enumerated) {
            bad = true;
            if (mismatches == 0)
                o.fail("models/solutions differ on\n" + to_string(s) + to_string(source) + " (" +
                       std::to_string(models.size()) + " vs " + std::to_string(enumerated.size()) + ")");
        }
        auto cautious = cautious_answers(models, q, s.target);
        auto certain = supported_certain_answers(s, source, q, budget, {.node_cap = kNodeCap}).answers;
        if (!(cautious == certain)) {
            bad = true;
            if (mismatches == 0) o.fail("cautious " + show(cautious) + " vs certain " + show(certain));
        }
        for (const auto& j : enumerated) {
            auto v = oracle::is_supported(s, source, j, 5000);
            if (!v) continue;
            ++oracle_checked;
            if (!*v) {
                bad = true;
                if (mismatches == 0) o.fail("oracle rejects\n" + to_string(j) + "for\n" + to_string(s));
            }
        }
        mismatches += bad;
    }
    double t = seconds_since(t0);
    if (t >= 300) o.fail("took " + std::to_string(t) + " s");
    if (mismatches) o.detail << " [" << mismatches << " mismatching settings]";
    if (o.pass)
        o.detail << trials << " settings, " << solutions << " solutions (" << oracle_checked
                 << " re-checked by brute force), 0 mismatches, " << skipped << " over the search cap skipped; " << t
                 << " s";
    if (trials < 200) o.fail("only " + std::to_string(trials) + " settings completed");
}

void c5(Outcome& o, std::mt19937_64& rng) {
    std::size_t trials = 0, mismatches = 0, skipped = 0;
    for (; trials < 220; ++trials) {
        auto s = gen::weakly_acyclic_setting(rng, {.egds = trials % 2 == 1});
        auto source = gen::source_instance(rng, s);
        auto q = trials % 2 ? gen::union_of_cqs(rng, s) : gen::conjunctive_query(rng, s);
        auto classical = certain_answers_positive(s, source, q);
        // Enough fresh constants to give every null of the chase its own value.
        auto ch = chase(s, source);
        std::size_t fresh = ch.success ? ch.universal.nulls().size() : 0;
        if (fresh > 6) {
            ++skipped;
            continue;
        }
        auto budget = make_budget(s, source, &q, fresh);
        Answers supported;
        try {
            supported = support::exact_answers(s, source, q, budget, kNodeCap);
        } catch (const CapExceeded&) {
            ++skipped;
            continue;
        }
        if (!(supported == classical)) {
            if (mismatches == 0)
                o.fail("supported " + show(supported) + " vs classical " + show(classical) + " on\n" +
                       to_string(s) + to_string(source));
            ++mismatches;
        }
    }
    if (mismatches) o.detail << " [" << mismatches << " mismatches]";
    if (o.pass) o.detail << trials - skipped << " settings with CQ/UCQ queries agree (" << skipped << " skipped)";
}

void c6(Outcome& o) {
    auto ex = support::load_example("ex4");
    std::vector<std::string> trace;
    auto r = conditional_chase(ex.setting, ex.source, {.step_cap = std::nullopt, .trace = &trace});
    std::multiset<std::string> got;
    auto nulls = r.result.nulls();
    for (const auto& cf : r.result.facts) {
        auto line = to_string(cf.fact) + " :: " + to_string(cf.cond);
        if (nulls.size() == 1) {
            auto name = to_string(*nulls.begin());
            for (std::size_t p; (p = line.find(name)) != std::string::npos;) line.replace(p, name.size(), "N");
        }
        got.insert(line);
    }
    std::multiset<std::string> want{"R(\"a\", N) :: true", "S(\"b1\") :: true", "S(\"b2\") :: true",
                                    "T(\"a\") :: N = \"b1\"", "T(\"a\") :: N = \"b2\""};
    // Atoms print as R("a",N) or R("a", N) depending on spacing; compare without blanks.
    auto squash = [](const std::multiset<std::string>& xs) {
        std::multiset<std::string> out;
        for (auto x : xs) {
            std::erase(x, ' ');
            out.insert(x);
        }
        return out;
    };
    if (nulls.size() != 1) o.fail("expected one null, got " + std::to_string(nulls.size()));
    if (squash(got) != squash(want)) {
        std::string g;
        for (const auto& x : got) g += "\n  " + x;
        o.fail("conditional facts:" + g);
    }
    if (trace.size() != 5 || trace.back().find("t1") == std::string::npos ||
        trace.back().find("b2") == std::string::npos)
        o.fail("the step adding T(a) for the second condition is missing from the trace");
    if (o.pass) o.detail << "5 conditional facts, last step fires t1 under " << "_ = b2";
}

void c7(Outcome& o, std::mt19937_64& rng) {
    std::size_t trials = 0, violations = 0, positive = 0, skipped = 0;
    for (; trials < 520; ++trials) {
        auto s = gen::weakly_acyclic_setting(rng, {});
        auto source = gen::source_instance(rng, s);
        bool pos = trials % 3 == 0;
        auto q = pos ? (trials % 2 ? gen::union_of_cqs(rng, s) : gen::conjunctive_query(rng, s))
                     : gen::fo_query(rng, s);
        auto ci = conditional_chase(s, source).result;
        if (ci.nulls().size() > 6) {
            ++skipped;
            continue;
        }
        CertainOptions opts;
        opts.constants = constants_for(s, source, q);
        auto approx = conditional_certain_approx(ci, q, opts);
        auto exact = conditional_certain_exact(ci, q, opts);
        auto budget = make_budget(s, source, &q, std::max<std::size_t>(ci.nulls().size(), 1));
        Answers supported;
        try {
            supported = support::exact_answers(s, source, q, budget, kNodeCap);
        } catch (const CapExceeded&) {
            ++skipped;
            continue;
        }
        std::string why;
        if (!subset(approx, exact)) why = "approx " + show(approx) + " not within exact " + show(exact);
        else if (!supported.no_solutions && !subset(exact, supported.tuples))
            why = "exact " + show(exact) + " not within supported " + show(supported);
        else if (is_positive(q) && approx != exact)
            why = "positive query: approx " + show(approx) + " != exact " + show(exact);
        if (is_positive(q)) ++positive;
        if (!why.empty()) {
            if (violations == 0) o.fail(why + " on\n" + to_string(s) + to_string(source) + to_string(q));
            ++violations;
        }
    }
    if (violations) o.detail << " [" << violations << " violations]";
    if (o.pass)
        o.detail << trials - skipped << " trials (" << positive << " positive queries), 0 violations (" << skipped
                 << " skipped)";
}

void c8(Outcome& o, std::mt19937_64& rng) {
    std::size_t rewrites = 0, violating = 0, approx_trials = 0, approx_skipped = 0, bad = 0;
    std::vector<Term> domain{Term::constant("a"), Term::constant("b"), Term::constant("c"), Term::constant("d")};
    while (rewrites < 250) {
        auto s = gen::weakly_acyclic_setting(rng, {.egds = true});
        auto egds = s.egds();
        if (egds.empty()) continue;
        auto q = gen::fo_query(rng, s);
        auto extra = s.constants();
        auto qc = constants_of(q);
        extra.insert(qc.begin(), qc.end());
        auto rq = rewrite_with_egds(q, egds, s.target, extra);
        auto j = gen::target_instance(rng, s, domain, 5);
        bool sat = true;
        for (const auto& e : egds) sat = sat && oracle::satisfies_all(Setting{{}, s.target, {}, {e}}, {}, j);
        auto got = oracle::evaluate(rq.combined, j, extra);
        std::set<Tuple> want;
        if (sat) {
            want = oracle::evaluate(q, j);
        } else {
            ++violating;
            auto pool = j.adom();
            pool.insert(extra.begin(), extra.end());
            want = oracle::evaluate(Query::make(q.head, f_and([&] {
                                                    std::vector<FormulaPtr> fs;
                                                    for (const auto& h : q.head) fs.push_back(f_eq(h, h));
                                                    return fs;
                                                }())),
                                    j, pool);
        }
        ++rewrites;
        if (got != want) {
            if (bad == 0) o.fail("Q' " + show(got) + " vs expected " + show(want) + " for " + to_string(q));
            ++bad;
        }

        auto source = gen::source_instance(rng, s);
        auto approx = approx_answers_with_egds(s, source, q);
        auto ci_nulls = conditional_chase(s.without_egds(), source).result.nulls().size();
        auto budget = make_budget(s, source, &q, std::max<std::size_t>(ci_nulls, 1));
        Answers supported;
        try {
            supported = support::exact_answers(s, source, q, budget, kNodeCap);
        } catch (const CapExceeded&) {
            ++approx_skipped;
            continue;
        }
        ++approx_trials;
        if (approx.no_solutions != supported.no_solutions ||
            (!supported.no_solutions && !subset(approx.tuples, supported.tuples))) {
            if (bad == 0)
                o.fail("approx " + show(approx) + " vs supported " + show(supported) + " on\n" + to_string(s) +
                       to_string(source) + to_string(q));
            ++bad;
        }
    }
    if (bad) o.detail << " [" << bad << " failures]";
    if (o.pass)
        o.detail << rewrites << " rewrites checked (" << violating << " on EGD-violating instances), "
                 << approx_trials << " approx-with-EGD runs within the supported answers (" << approx_skipped
                 << " over the search cap skipped)";
}

void c9(Outcome& o) {
    auto t0 = Clock::now();
    auto verdict = [&](const std::string& facts) {
        auto ex = support::load_example("threecol", facts);
        auto budget = make_budget(ex.setting, ex.source, &ex.query);
        auto a = support::exact_answers(ex.setting, ex.source, ex.query, budget);
        return !a.no_solutions && !a.tuples.empty();
    };
    if (verdict("triangle.facts")) o.fail("triangle reported certain");
    if (!verdict("k4.facts")) o.fail("K4 reported not certain");
    double t = seconds_since(t0);
    if (t >= 10) o.fail("took " + std::to_string(t) + " s");
    if (o.pass) o.detail << "triangle not certain, K4 certain; " << t << " s";
}

void c10(Outcome& o) {
    auto check = [&](const std::string& name, bool expected) {
        auto s = parse_setting(read_file(support::data_path(name + "/setting.dex")));
        bool got = is_weakly_acyclic(s);
        if (got != expected) o.fail(name + " verdict " + (got ? "yes" : "no"));
        if (oracle::weakly_acyclic(s) != expected) o.fail(name + " brute-force verdict disagrees");
    };
    check("ex1", true);
    check("ex2", true);
    check("nonwa", false);
    if (o.pass) o.detail << "ex1 yes, ex2 yes, T(x,y) -> exists z. T(y,z) no";
}

}  // namespace

int main() {
    auto seed = gen::seed();
    std::cout << "seed " << seed << "\n";
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"C1 Ex1 answers", c1},
        {"C2 Ex2 answers and solutions", c2},
        {"C3 Ex2 program golden", c3},
        {"C4 stable models = supported solutions", [&](Outcome& o) { c4(o, rng); }},
        {"C5 supported = classical on CQ/UCQ", [&](Outcome& o) { c5(o, rng); }},
        {"C6 conditional chase on Ex4", c6},
        {"C7 approx <= exact ccert <= supported", [&](Outcome& o) { c7(o, rng); }},
        {"C8 EGD rewriting", [&](Outcome& o) { c8(o, rng); }},
        {"C9 3-colorability", c9},
        {"C10 weak acyclicity verdicts", c10},
    };
    int failed = 0;
    for (auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
