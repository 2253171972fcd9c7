#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dex/analysis.hpp"
#include "dex/asp.hpp"
#include "dex/chase.hpp"
#include "dex/conditional.hpp"
#include "dex/dsl.hpp"
#include "dex/egd_rewrite.hpp"
#include "dex/error.hpp"
#include "dex/supported.hpp"

using namespace dex;

namespace {

struct Config {
    std::string setting_path;
    std::string facts_path;
    std::string query_path;
    std::string mode = "exact";
    std::string external_solver;
    std::string output_path;
    std::string dialect = "native";
    std::optional<std::size_t> fresh;
    std::optional<std::size_t> cap;
    bool dot = false;
    bool trace = false;
    bool conditional = false;
    bool expand_choice = false;
};

struct Inputs {
    Setting setting;
    Instance source;
    std::optional<Query> query;
};

Inputs load(const Config& cfg) {
    Inputs in;
    in.setting = parse_setting(read_file(cfg.setting_path), cfg.setting_path);
    if (!cfg.facts_path.empty())
        in.source = parse_instance(read_file(cfg.facts_path), in.setting.source, cfg.facts_path);
    if (!cfg.query_path.empty())
        in.query = parse_query(read_file(cfg.query_path), in.setting.target, cfg.query_path);
    return in;
}

void require_wa(const Setting& s, const std::string& what) {
    if (!is_weakly_acyclic(s))
        throw UsageError(what + " needs a weakly acyclic setting (see `dex check`)");
}

std::string format_tuple(const Tuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t[i]);
    }
    return out;
}

int print_answers(std::ostream& out, const std::string& mode, bool exact, const Answers& a, std::size_t arity) {
    out << "% mode=" << mode << " guarantee=" << (exact ? "exact" : "under-approximation") << "\n";
    if (a.no_solutions) {
        out << "no supported solutions\n";
        return 1;
    }
    if (arity == 0) {
        out << (a.tuples.empty() ? "false" : "true") << "\n";
        return 0;
    }
    for (const auto& t : a.tuples) out << format_tuple(t) << "\n";
    return 0;
}

int cmd_check(const Config& cfg, std::ostream& out) {
    auto in = load(cfg);
    auto graph = dependency_graph(in.setting.target_tgds(), in.setting.target);
    bool wa = is_weakly_acyclic(graph);
    out << "weakly-acyclic: " << (wa ? "yes" : "no") << "\n";
    out << "positions: " << graph.nodes.size() << "\n";
    out << "edges: " << graph.normal_edges.size() << " normal, " << graph.special_edges.size() << " special\n";
    if (cfg.dot) out << to_dot(graph);
    if (!wa) return 1;
    if (!cfg.facts_path.empty()) {
        bool ok = exists_supported_solution(in.setting, in.source);
        out << "solutions: " << (ok ? "exist" : "none") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_solutions(const Config& cfg, std::ostream& out, std::ostream& err) {
    auto in = load(cfg);
    if (!cfg.cap) require_wa(in.setting, "solutions without --cap");
    auto budget = make_budget(in.setting, in.source, nullptr, cfg.fresh);
    EnumerationOptions opts;
    if (cfg.cap) opts.node_cap = *cfg.cap;
    auto result = enumerate_supported_solutions(in.setting, in.source, budget, opts);
    if (result.fresh_exhausted)
        err << "warning: the fresh-constant budget was exhausted; raise --fresh for a complete listing\n";
    bool first = true;
    for (const auto& s : result.solutions) {
        if (!first) out << "---\n";
        first = false;
        out << to_string(s);
    }
    if (result.solutions.empty()) {
        out << "no supported solutions\n";
        return 1;
    }
    return 0;
}

int cmd_answer(const Config& cfg, std::ostream& out, std::ostream& err) {
    auto in = load(cfg);
    if (!in.query) throw UsageError("answer needs --query");
    const Query& q = *in.query;

    if (cfg.mode == "classical") {
        if (!is_positive(q))
            throw UsageError("classical mode requires a positive query (atoms, &, |, exists only); "
                             "use --mode exact for queries with negation or universal quantifiers");
        ChaseOptions co;
        co.step_cap = cfg.cap;
        return print_answers(out, "classical", true, certain_answers_positive(in.setting, in.source, q, co),
                             q.arity());
    }
    if (cfg.mode == "approx") {
        require_wa(in.setting, "approx mode");
        return print_answers(out, "approx", false, approx_answers_with_egds(in.setting, in.source, q), q.arity());
    }
    if (cfg.mode != "exact" && cfg.mode != "asp") throw UsageError("unknown mode " + cfg.mode);

    if (!cfg.cap) require_wa(in.setting, cfg.mode + " mode without --cap");
    auto budget = make_budget(in.setting, in.source, &q, cfg.fresh);
    Answers answers;
    if (cfg.mode == "exact") {
        EnumerationOptions opts;
        if (cfg.cap) opts.node_cap = *cfg.cap;
        auto r = supported_certain_answers(in.setting, in.source, q, budget, opts);
        if (r.fresh_exhausted)
            err << "warning: the fresh-constant budget was exhausted; raise --fresh if answers look too large\n";
        answers = r.answers;
    } else {
        auto [program, ed] = translate_setting(in.setting, in.source, budget);
        std::set<Instance> models;
        if (!cfg.external_solver.empty()) {
            models = external_stable_models(program, ed, cfg.external_solver);
        } else {
            SolveOptions so;
            if (cfg.cap) so.node_cap = *cfg.cap;
            models = stable_models(program, ed, so);
        }
        answers = cautious_answers(models, q, in.setting.target);
    }
    answers.tuples = drop_fresh_tuples(answers.tuples, budget);
    return print_answers(out, cfg.mode, true, answers, q.arity());
}

int cmd_emit_asp(const Config& cfg, std::ostream& out) {
    auto in = load(cfg);
    require_wa(in.setting, "emit-asp");
    auto budget = make_budget(in.setting, in.source, nullptr, cfg.fresh);
    auto [program, ed] = translate_setting(in.setting, in.source, budget);
    if (cfg.expand_choice) program = expand_choices(program);
    auto dialect = cfg.dialect == "clingo" ? AspDialect::kClingo : AspDialect::kNative;
    auto text = emit_program_text(program, ed, dialect);
    if (cfg.output_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(cfg.output_path);
    if (!file) throw UsageError("cannot write " + cfg.output_path);
    file << text;
    return 0;
}

int cmd_chase(const Config& cfg, std::ostream& out) {
    auto in = load(cfg);
    std::vector<std::string> trace;
    if (cfg.conditional) {
        ConditionalChaseOptions co;
        co.step_cap = cfg.cap;
        if (cfg.trace) co.trace = &trace;
        auto r = conditional_chase(in.setting, in.source, co);
        for (const auto& line : trace) out << "% " << line << "\n";
        out << to_string(r.result);
        return 0;
    }
    ChaseOptions co;
    co.step_cap = cfg.cap;
    if (cfg.trace) co.trace = &trace;
    auto r = chase(in.setting, in.source, co);
    for (const auto& line : trace) out << "% " << line << "\n";
    if (!r.success) {
        out << "chase failed: " << r.failed_egd << " equates two distinct constants\n";
        return 1;
    }
    out << to_string(r.universal);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dex: supported solutions and certain answers for data exchange settings"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub, bool facts_required, bool query) {
        sub->add_option("--setting", cfg.setting_path, "setting file")->required()->check(CLI::ExistingFile);
        auto* f = sub->add_option("--facts", cfg.facts_path, "source instance file")->check(CLI::ExistingFile);
        if (facts_required) f->required();
        if (query) sub->add_option("--query", cfg.query_path, "query file")->required()->check(CLI::ExistingFile);
        sub->add_option("--cap", cfg.cap, "step or search-node cap");
    };

    auto* check = app.add_subcommand("check", "weak acyclicity and existence of solutions");
    common(check, false, false);
    check->add_flag("--dot", cfg.dot, "print the dependency graph in DOT");

    auto* solutions = app.add_subcommand("solutions", "list supported solutions");
    common(solutions, true, false);
    solutions->add_option("--fresh", cfg.fresh, "number of fresh constants");

    auto* answer = app.add_subcommand("answer", "certain answers of a query");
    common(answer, true, true);
    answer->add_option("--mode", cfg.mode, "exact, asp, approx or classical")
        ->check(CLI::IsMember({"exact", "asp", "approx", "classical"}));
    answer->add_option("--fresh", cfg.fresh, "number of fresh constants");
    answer->add_option("--external-solver", cfg.external_solver, "clingo-compatible solver for --mode asp");

    auto* emit = app.add_subcommand("emit-asp", "print the logic program of a setting");
    common(emit, false, false);
    emit->add_option("--fresh", cfg.fresh, "number of fresh constants");
    emit->add_flag("--expand-choice", cfg.expand_choice, "replace choice atoms by plain rules");
    emit->add_option("--dialect", cfg.dialect, "native or clingo")->check(CLI::IsMember({"native", "clingo"}));
    emit->add_option("-o,--output", cfg.output_path, "output file");

    auto* chase_cmd = app.add_subcommand("chase", "run the chase");
    common(chase_cmd, true, false);
    chase_cmd->add_flag("--conditional", cfg.conditional, "conditional chase (TGDs only)");
    chase_cmd->add_flag("--trace", cfg.trace, "print each step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(cfg, std::cout);
        if (*solutions) return cmd_solutions(cfg, std::cout, std::cerr);
        if (*answer) return cmd_answer(cfg, std::cout, std::cerr);
        if (*emit) return cmd_emit_asp(cfg, std::cout);
        if (*chase_cmd) return cmd_chase(cfg, std::cout);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
