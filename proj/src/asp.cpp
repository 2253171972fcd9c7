#include "dex/asp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "dex/error.hpp"
#include "dex/homomorphism.hpp"

namespace dex {

Literal Literal::pos(Atom a) {
    Literal l;
    l.atom = std::move(a);
    return l;
}

Literal Literal::neg(Atom a) {
    Literal l = pos(std::move(a));
    l.positive = false;
    return l;
}

Literal Literal::eq(Term a, Term b) {
    Literal l;
    l.kind = Kind::kEq;
    l.lhs = a;
    l.rhs = b;
    return l;
}

Literal Literal::neq(Term a, Term b) {
    Literal l = eq(a, b);
    l.positive = false;
    return l;
}

namespace {

const char* const kReservedPrefixes[] = {"ExChoice_", "Range_", "Chosen_", "DiffChoice_"};

bool is_reserved(const std::string& rel) {
    if (rel == "Dom") return true;
    return std::any_of(std::begin(kReservedPrefixes), std::end(kReservedPrefixes),
                       [&](const char* p) { return rel.rfind(p, 0) == 0; });
}

std::vector<Atom> positive_atoms(const Rule& r) {
    std::vector<Atom> out;
    for (const auto& l : r.body)
        if (l.kind == Literal::Kind::kAtom && l.positive) out.push_back(l.atom);
    return out;
}

std::set<Term> rule_variables(const Rule& r) {
    std::set<Term> out;
    auto add = [&](const Term& t) {
        if (t.is_var()) out.insert(t);
    };
    if (r.head)
        for (const auto& t : r.head->args) add(t);
    for (const auto& l : r.body) {
        if (l.kind == Literal::Kind::kAtom) {
            for (const auto& t : l.atom.args) add(t);
        } else {
            add(l.lhs);
            add(l.rhs);
        }
    }
    return out;
}

}  // namespace

void check_rule(const Rule& r) {
    std::set<Term> safe;
    for (const auto& a : positive_atoms(r))
        for (const auto& t : a.args)
            if (t.is_var()) safe.insert(t);
    for (const auto& v : rule_variables(r))
        if (!safe.contains(v)) throw UsageError("unsafe rule: variable " + v.name() + " has no positive occurrence");
    if (r.choice) {
        for (const auto& v : r.choice->x)
            if (std::find(r.choice->y.begin(), r.choice->y.end(), v) != r.choice->y.end())
                throw UsageError("choice sets are not disjoint");
        for (const auto* side : {&r.choice->x, &r.choice->y})
            for (const auto& v : *side)
                if (!safe.contains(v)) throw UsageError("choice variable " + v.name() + " is not in the body");
    }
}

std::pair<Program, ExtensionalDB> translate_setting(const Setting& setting, const Instance& source,
                                                    const ConstantBudget& budget) {
    for (const auto* schema : {&setting.source, &setting.target})
        for (const auto& [rel, arity] : *schema)
            if (is_reserved(rel.str()))
                throw UsageError("relation name " + rel.str() +
                                 " collides with a reserved name (Dom, ExChoice_, Range_, Chosen_, DiffChoice_)");
    Program p;
    for (const auto& t : setting.all_tgds()) {
        std::vector<Literal> body;
        for (const auto& a : t.body) body.push_back(Literal::pos(a));
        if (!t.has_existentials()) {
            for (const auto& h : t.head) p.rules.push_back(Rule{h, body, std::nullopt, {}});
            continue;
        }
        std::vector<Term> args = t.frontier;
        args.insert(args.end(), t.existentials.begin(), t.existentials.end());
        Atom ex("ExChoice_" + t.id, args);
        std::vector<Literal> choice_body = body;
        for (const auto& z : t.existentials) choice_body.push_back(Literal::pos(Atom("Dom", {z})));
        p.rules.push_back(Rule{ex, choice_body, Choice{t.frontier, t.existentials}, t.id});
        for (const auto& h : t.head) p.rules.push_back(Rule{h, {Literal::pos(ex)}, std::nullopt, {}});
    }
    for (const auto& e : setting.egds()) {
        std::vector<Literal> body;
        for (const auto& a : e.body) body.push_back(Literal::pos(a));
        body.push_back(Literal::neq(e.lhs, e.rhs));
        p.rules.push_back(Rule{std::nullopt, body, std::nullopt, {}});
    }
    ExtensionalDB ed;
    for (const auto& c : budget.all()) ed.facts.emplace_back("Dom", std::vector<Term>{c});
    for (const auto& f : source) ed.facts.push_back(f);
    return {std::move(p), std::move(ed)};
}

std::vector<Rule> expand_choice(const Rule& r) {
    if (!r.choice) return {r};
    const std::string& id = r.label.empty() ? (r.head ? r.head->relation.str() : std::string("c")) : r.label;
    const auto& x = r.choice->x;
    const auto& y = r.choice->y;
    std::vector<Term> xy = x;
    xy.insert(xy.end(), y.begin(), y.end());

    Atom range("Range_" + id, y);
    Atom chosen("Chosen_" + id, xy);
    Atom diff("DiffChoice_" + id, xy);

    Rule plain = r;
    plain.choice.reset();
    plain.label.clear();

    std::vector<Rule> out;
    out.push_back(Rule{range, plain.body, std::nullopt, {}});
    Rule r2 = plain;
    r2.body.push_back(Literal::pos(chosen));
    out.push_back(r2);
    Rule r3{chosen, plain.body, std::nullopt, {}};
    r3.body.push_back(Literal::neg(diff));
    out.push_back(r3);

    auto used = rule_variables(r);
    std::vector<Term> w;
    for (std::size_t i = 0, k = 1; i < y.size(); ++k) {
        Term v = Term::variable("w_" + std::to_string(k));
        if (used.contains(v)) continue;
        w.push_back(v);
        ++i;
    }
    std::vector<Term> xw = x;
    xw.insert(xw.end(), w.begin(), w.end());
    for (std::size_t i = 0; i < y.size(); ++i) {
        Rule r4{diff, {Literal::pos(Atom(chosen.relation, xw)), Literal::pos(range), Literal::neq(y[i], w[i])},
                std::nullopt, {}};
        out.push_back(r4);
    }
    return out;
}

Program expand_choices(const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        auto rs = expand_choice(r);
        out.rules.insert(out.rules.end(), rs.begin(), rs.end());
    }
    return out;
}

int GroundProgram::intern(const Atom& a) {
    auto [it, inserted] = index.emplace(a, static_cast<int>(atoms.size()));
    if (inserted) atoms.push_back(a);
    return it->second;
}

int GroundProgram::find(const Atom& a) const {
    auto it = index.find(a);
    return it == index.end() ? -1 : it->second;
}

namespace {

// Decides the equality literals of a ground rule; false if one fails.
bool equalities_hold(const Rule& r, const Homomorphism& h) {
    for (const auto& l : r.body) {
        if (l.kind != Literal::Kind::kEq) continue;
        bool same = apply_to(h, l.lhs) == apply_to(h, l.rhs);
        if (same != l.positive) return false;
    }
    return true;
}

void emit_ground(GroundProgram& g, const Rule& r, const Homomorphism& h, const Instance* possible,
                 const GroundOptions& options) {
    if (!equalities_hold(r, h)) return;
    GroundRule gr;
    for (const auto& l : r.body) {
        if (l.kind != Literal::Kind::kAtom) continue;
        Atom a = apply_to(h, l.atom);
        if (l.positive) {
            gr.pos.push_back(g.intern(a));
        } else if (!possible || possible->contains(a)) {
            gr.neg.push_back(g.intern(a));
        }
    }
    if (r.head) gr.head = g.intern(apply_to(h, *r.head));
    g.rules.push_back(std::move(gr));
    if (g.rules.size() > options.rule_cap)
        throw CapExceeded("grounding exceeded " + std::to_string(options.rule_cap) + " rules");
}

}  // namespace

GroundProgram ground(const Program& program, const ExtensionalDB& ed, const GroundOptions& options) {
    Program p = expand_choices(program);
    for (const auto& r : p.rules) check_rule(r);
    GroundProgram g;
    for (const auto& f : ed.facts) {
        if (!f.is_fact() || f.has_nulls()) throw UsageError("extensional facts must be ground: " + to_string(f));
        GroundRule gr;
        gr.head = g.intern(f);
        g.rules.push_back(gr);
    }

    if (options.exhaustive) {
        std::set<Term> universe;
        for (const auto& f : ed.facts) universe.insert(f.args.begin(), f.args.end());
        for (const auto& r : p.rules) {
            auto add = [&](const Term& t) {
                if (t.is_const()) universe.insert(t);
            };
            if (r.head)
                for (const auto& t : r.head->args) add(t);
            for (const auto& l : r.body) {
                for (const auto& t : l.atom.args) add(t);
                add(l.lhs);
                add(l.rhs);
            }
        }
        std::vector<Term> u(universe.begin(), universe.end());
        for (const auto& r : p.rules) {
            auto vars = rule_variables(r);
            std::vector<Term> vs(vars.begin(), vars.end());
            Homomorphism h;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == vs.size()) {
                    emit_ground(g, r, h, nullptr, options);
                    return;
                }
                for (const auto& c : u) {
                    h[vs[i]] = c;
                    rec(i + 1);
                }
                h.erase(vs[i]);
            };
            rec(0);
        }
        return g;
    }

    // Over-approximate the derivable atoms by ignoring negation, then
    // instantiate only against those.
    Instance possible;
    for (const auto& f : ed.facts) possible.insert(f);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (!r.head) continue;
            std::vector<Atom> derived;
            for_each_homomorphism(positive_atoms(r), possible, {}, [&](const Homomorphism& h) {
                if (equalities_hold(r, h)) derived.push_back(apply_to(h, *r.head));
                return true;
            });
            for (const auto& a : derived) changed |= possible.insert(a);
        }
    }
    for (const auto& r : p.rules) {
        for_each_homomorphism(positive_atoms(r), possible, {}, [&](const Homomorphism& h) {
            emit_ground(g, r, h, &possible, options);
            return true;
        });
    }
    return g;
}

GroundProgram reduct(const GroundProgram& g, const std::set<int>& m) {
    GroundProgram out;
    out.atoms = g.atoms;
    out.index = g.index;
    for (const auto& r : g.rules) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](int a) { return m.contains(a); })) continue;
        out.rules.push_back(GroundRule{r.head, r.pos, {}});
    }
    return out;
}

GroundProgram reduct(const GroundProgram& g, const Instance& m) {
    std::set<int> ids;
    for (const auto& f : m) {
        int i = g.find(f);
        if (i >= 0) ids.insert(i);
    }
    return reduct(g, ids);
}

std::set<int> least_model(const GroundProgram& g) {
    std::set<int> out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (r.head < 0 || !r.neg.empty() || out.contains(r.head)) continue;
            if (std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return out.contains(a); })) {
                out.insert(r.head);
                changed = true;
            }
        }
    }
    return out;
}

namespace {

// Branch-and-propagate search in the style of smodels: the lower bound is
// the least model with known-false negative atoms, the upper bound the
// least model with possibly-false ones.
class StableSolver {
public:
    StableSolver(const GroundProgram& g, const SolveOptions& options) : g_(g), options_(options) {
        const std::size_t n = g.atoms.size();
        watch_.assign(n, {});
        for (std::size_t i = 0; i < g.rules.size(); ++i)
            for (int a : g.rules[i].pos) watch_[a].push_back(i);
        std::vector<bool> negative(n, false);
        for (const auto& r : g.rules)
            for (int a : r.neg) negative[a] = true;
        for (std::size_t a = 0; a < n; ++a)
            if (negative[a]) branch_atoms_.push_back(static_cast<int>(a));
        std::stable_sort(branch_atoms_.begin(), branch_atoms_.end(), [&](int a, int b) {
            return chosen_rank(a) < chosen_rank(b);
        });
    }

    std::vector<std::set<int>> run() {
        std::vector<signed char> val(g_.atoms.size(), -1);
        search(val);
        return std::move(models_);
    }

private:
    int chosen_rank(int a) const { return g_.atoms[a].relation.str().rfind("Chosen_", 0) == 0 ? 0 : 1; }

    // Least model of the rules whose negative body passes `ok`.
    std::vector<bool> lfp(const std::function<bool(const GroundRule&)>& ok) const {
        const std::size_t n = g_.atoms.size();
        std::vector<bool> in(n, false);
        std::vector<std::size_t> missing(g_.rules.size());
        std::vector<int> queue;
        for (std::size_t i = 0; i < g_.rules.size(); ++i) {
            const auto& r = g_.rules[i];
            missing[i] = r.pos.size();
            if (r.head >= 0 && missing[i] == 0 && ok(r) && !in[r.head]) {
                in[r.head] = true;
                queue.push_back(r.head);
            }
        }
        while (!queue.empty()) {
            int a = queue.back();
            queue.pop_back();
            for (std::size_t i : watch_[a]) {
                const auto& r = g_.rules[i];
                // An atom may occur twice in one body.
                if (--missing[i] == 0 && r.head >= 0 && !in[r.head] && ok(r)) {
                    in[r.head] = true;
                    queue.push_back(r.head);
                }
            }
        }
        return in;
    }

    bool propagate(std::vector<signed char>& val, std::vector<bool>& lower) const {
        for (;;) {
            lower = lfp([&](const GroundRule& r) {
                return std::all_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[a] == 0; });
            });
            auto upper = lfp([&](const GroundRule& r) {
                return std::none_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[a] == 1; });
            });
            bool changed = false;
            for (std::size_t a = 0; a < val.size(); ++a) {
                if (lower[a]) {
                    if (val[a] == 0) return false;
                    if (val[a] < 0) {
                        val[a] = 1;
                        changed = true;
                    }
                } else if (!upper[a]) {
                    if (val[a] == 1) return false;
                    if (val[a] < 0) {
                        val[a] = 0;
                        changed = true;
                    }
                }
            }
            for (const auto& r : g_.rules) {
                if (r.head >= 0) continue;
                if (std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return val[a] == 1; }) &&
                    std::all_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[a] == 0; }))
                    return false;
            }
            if (!changed) return true;
        }
    }

    void search(std::vector<signed char> val) {
        if (options_.node_cap && ++nodes_ > options_.node_cap)
            throw CapExceeded("stable-model search exceeded " + std::to_string(options_.node_cap) + " nodes");
        std::vector<bool> lower;
        if (!propagate(val, lower)) return;
        for (int a : branch_atoms_) {
            if (val[a] >= 0) continue;
            auto t = val;
            t[a] = 1;
            search(std::move(t));
            val[a] = 0;
            search(std::move(val));
            return;
        }
        verify(lower);
        std::set<int> m;
        for (std::size_t a = 0; a < lower.size(); ++a)
            if (lower[a]) m.insert(static_cast<int>(a));
        models_.push_back(std::move(m));
    }

    // M must be the least model of its own reduct and satisfy every
    // constraint of it.
    void verify(const std::vector<bool>& m) const {
        auto red = lfp([&](const GroundRule& r) {
            return std::none_of(r.neg.begin(), r.neg.end(), [&](int a) { return m[a]; });
        });
        if (red != m) throw std::logic_error("stable-model search produced an unstable model");
        for (const auto& r : g_.rules)
            if (r.head < 0 && std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return m[a]; }) &&
                std::none_of(r.neg.begin(), r.neg.end(), [&](int a) { return m[a]; }))
                throw std::logic_error("stable-model search produced a model violating a constraint");
    }

    const GroundProgram& g_;
    const SolveOptions& options_;
    std::vector<std::vector<std::size_t>> watch_;
    std::vector<int> branch_atoms_;
    std::vector<std::set<int>> models_;
    std::size_t nodes_ = 0;
};

}  // namespace

std::vector<std::set<int>> stable_models(const GroundProgram& g, const SolveOptions& options) {
    StableSolver s(g, options);
    return s.run();
}

std::set<Instance> stable_models(const Program& p, const ExtensionalDB& ed, const SolveOptions& options) {
    GroundProgram g = ground(p, ed, options.ground);
    std::set<Instance> out;
    for (const auto& m : stable_models(g, options)) {
        Instance inst;
        for (int a : m) inst.insert(g.atoms[a]);
        out.insert(std::move(inst));
    }
    return out;
}

Answers cautious_answers(const std::set<Instance>& models, const Query& q, const Schema& target) {
    Answers out;
    if (models.empty()) {
        out.no_solutions = true;
        return out;
    }
    bool first = true;
    for (const auto& m : models) {
        auto ans = evaluate(q, m.restricted_to(target));
        if (first) {
            out.tuples = std::move(ans);
            first = false;
        } else {
            std::set<Tuple> keep;
            std::set_intersection(out.tuples.begin(), out.tuples.end(), ans.begin(), ans.end(),
                                  std::inserter(keep, keep.end()));
            out.tuples = std::move(keep);
        }
    }
    return out;
}

Answers cautious_answers(const ExtensionalDB& ed, const Query& q, const Program& p, const Schema& target,
                         const SolveOptions& options) {
    return cautious_answers(stable_models(p, ed, options), q, target);
}

namespace {

bool plain_identifier(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    if (s == "not") return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool canonical_number(const std::string& s) { return is_natural(s) && (s == "0" || s[0] != '0'); }

std::string asp_term(const Term& t) {
    if (t.is_var()) {
        const std::string& n = t.name();
        if (n[0] == '_') return "V" + n;
        std::string out = n;
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
        return out;
    }
    if (t.is_null()) throw UsageError("labeled nulls cannot appear in a logic program");
    const std::string& n = t.name();
    if (plain_identifier(n) || canonical_number(n)) return n;
    std::string out = "\"";
    for (char c : n) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string asp_relation(Symbol r, AspDialect d) { return d == AspDialect::kClingo ? "r_" + r.str() : r.str(); }

std::string asp_atom(const Atom& a, AspDialect d) {
    std::string out = asp_relation(a.relation, d) + "(";
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (i) out += ",";
        out += asp_term(a.args[i]);
    }
    return out + ")";
}

std::string var_list(const std::vector<Term>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += asp_term(vs[i]);
    }
    return out;
}

struct Line {
    std::string head_relation;
    std::string body;
    std::string text;

    bool operator<(const Line& o) const {
        return std::tie(head_relation, body, text) < std::tie(o.head_relation, o.body, o.text);
    }
};

Line render(const Rule& r, AspDialect d) {
    std::string body;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i) body += ", ";
        const auto& l = r.body[i];
        if (l.kind == Literal::Kind::kAtom) {
            if (!l.positive) body += "not ";
            body += asp_atom(l.atom, d);
        } else {
            body += asp_term(l.lhs) + (l.positive ? " = " : " != ") + asp_term(l.rhs);
        }
    }
    if (r.choice) {
        if (!body.empty()) body += ", ";
        body += "choice((" + var_list(r.choice->x) + "),(" + var_list(r.choice->y) + "))";
    }
    Line line;
    line.head_relation = r.head ? asp_relation(r.head->relation, d) : std::string();
    line.body = body;
    std::string head = r.head ? asp_atom(*r.head, d) : std::string();
    if (body.empty())
        line.text = head + ".";
    else if (r.head)
        line.text = head + " :- " + body + ".";
    else
        line.text = ":- " + body + ".";
    return line;
}

}  // namespace

std::string emit_program_text(const Program& program, const ExtensionalDB& ed, AspDialect dialect) {
    const Program p = dialect == AspDialect::kClingo ? expand_choices(program) : program;
    std::vector<Line> lines;
    for (const auto& r : p.rules) lines.push_back(render(r, dialect));
    for (const auto& f : ed.facts) lines.push_back(render(Rule{f, {}, std::nullopt, {}}, dialect));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l.text + "\n";
    return out;
}

std::vector<Atom> parse_answer_line(const std::string& line) {
    std::vector<Atom> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto ident = [&] {
        std::size_t s = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_' ||
                                   line[i] == '-'))
            ++i;
        return line.substr(s, i - s);
    };
    for (;;) {
        skip_ws();
        if (i >= line.size()) break;
        std::string name = ident();
        if (name.empty()) throw Error("cannot parse solver output near: " + line.substr(i, 20));
        std::vector<Term> args;
        if (i < line.size() && line[i] == '(') {
            ++i;
            for (;;) {
                skip_ws();
                if (i < line.size() && line[i] == '"') {
                    ++i;
                    std::string s;
                    while (i < line.size() && line[i] != '"') {
                        if (line[i] == '\\' && i + 1 < line.size()) ++i;
                        s.push_back(line[i++]);
                    }
                    ++i;
                    args.push_back(Term::constant(s));
                } else {
                    std::string s = ident();
                    if (s.empty()) throw Error("cannot parse solver output near: " + line.substr(i, 20));
                    args.push_back(Term::constant(s));
                }
                skip_ws();
                if (i < line.size() && line[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < line.size() && line[i] == ')') {
                    ++i;
                    break;
                }
                throw Error("cannot parse solver output: unbalanced atom in " + line);
            }
        }
        if (name.rfind("r_", 0) == 0 && !args.empty()) out.emplace_back(name.substr(2), std::move(args));
    }
    return out;
}

std::set<Instance> external_stable_models(const Program& p, const ExtensionalDB& ed, const std::string& solver) {
    namespace fs = std::filesystem;
    std::random_device rd;
    fs::path file = fs::temp_directory_path() / ("dex-" + std::to_string(rd()) + ".lp");
    {
        std::ofstream out(file);
        out << emit_program_text(p, ed, AspDialect::kClingo);
    }
    auto quote = [](const std::string& s) {
        std::string out = "'";
        for (char c : s) {
            if (c == '\'')
                out += "'\\''";
            else
                out.push_back(c);
        }
        return out + "'";
    };
    std::string cmd = quote(solver) + " " + quote(file.string()) + " 0";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        fs::remove(file);
        throw Error("cannot run external solver " + solver);
    }
    std::string output;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    int status = pclose(pipe);
    fs::remove(file);

    std::set<Instance> models;
    bool saw_result = false;
    std::size_t pos = 0;
    bool expect_model = false;
    while (pos < output.size()) {
        std::size_t end = output.find('\n', pos);
        if (end == std::string::npos) end = output.size();
        std::string line = output.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (expect_model) {
            Instance m;
            for (const auto& a : parse_answer_line(line)) m.insert(a);
            models.insert(std::move(m));
            expect_model = false;
        } else if (line.rfind("Answer:", 0) == 0) {
            expect_model = true;
            saw_result = true;
        } else if (line.find("UNSATISFIABLE") != std::string::npos || line.find("SATISFIABLE") != std::string::npos) {
            saw_result = true;
        }
    }
    if (!saw_result)
        throw Error("external solver produced no answer sets or verdict (exit status " + std::to_string(status) + ")");
    return models;
}

}  // namespace dex
