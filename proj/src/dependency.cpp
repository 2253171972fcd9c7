#include "dex/dependency.hpp"

#include <algorithm>

#include "dex/error.hpp"

namespace dex {

namespace {

void collect_vars(const std::vector<Atom>& atoms, std::vector<Term>& ordered) {
    for (const auto& a : atoms)
        for (const auto& t : a.args)
            if (t.is_var() && std::find(ordered.begin(), ordered.end(), t) == ordered.end())
                ordered.push_back(t);
}

void reject_nulls(const std::string& id, const std::vector<Atom>& atoms) {
    for (const auto& a : atoms)
        if (a.has_nulls()) throw SchemaError("dependency " + id + " contains a null: " + to_string(a));
}

void check_atoms(const std::vector<Atom>& atoms, const Schema& schema, const std::string& id,
                 const char* where) {
    for (const auto& a : atoms) {
        auto it = schema.find(a.relation);
        if (it == schema.end())
            throw SchemaError("dependency " + id + ": relation " + a.relation.str() +
                              " is not declared in the " + where + " schema");
        if (it->second != a.arity())
            throw SchemaError("dependency " + id + ": " + a.relation.str() + " has arity " +
                              std::to_string(it->second) + ", used with " +
                              std::to_string(a.arity()));
    }
}

std::string join_atoms(const std::vector<Atom>& atoms) {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ", ";
        out += to_string(atoms[i]);
    }
    return out;
}

}  // namespace

Tgd Tgd::make(std::string id, std::vector<Atom> body, std::vector<Atom> head,
              std::vector<Term> existentials) {
    if (body.empty()) throw SchemaError("dependency " + id + " has an empty body");
    if (head.empty()) throw SchemaError("dependency " + id + " has an empty head");
    reject_nulls(id, body);
    reject_nulls(id, head);

    std::vector<Term> body_vars, head_vars;
    collect_vars(body, body_vars);
    collect_vars(head, head_vars);
    auto in = [](const std::vector<Term>& v, const Term& t) {
        return std::find(v.begin(), v.end(), t) != v.end();
    };

    for (const auto& z : existentials) {
        if (!z.is_var()) throw SchemaError("dependency " + id + ": existential is not a variable");
        if (in(body_vars, z))
            throw SchemaError("dependency " + id + ": existential " + z.name() +
                              " occurs in the body");
        if (!in(head_vars, z))
            throw SchemaError("dependency " + id + ": existential " + z.name() +
                              " does not occur in the head");
    }
    std::vector<Term> frontier;
    for (const auto& v : head_vars) {
        if (in(body_vars, v)) {
            frontier.push_back(v);
        } else if (!in(existentials, v)) {
            throw SchemaError("dependency " + id + ": head variable " + v.name() +
                              " is not in the body and not declared existential");
        }
    }

    // Set semantics for body and head.
    auto dedupe = [](std::vector<Atom>& atoms) {
        std::vector<Atom> out;
        for (auto& a : atoms)
            if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
        atoms = std::move(out);
    };
    dedupe(body);
    dedupe(head);

    Tgd t;
    t.id = std::move(id);
    t.body = std::move(body);
    t.head = std::move(head);
    t.existentials = std::move(existentials);
    t.frontier = std::move(frontier);
    return t;
}

std::set<Term> Tgd::body_variables() const {
    std::set<Term> out;
    for (const auto& a : body)
        for (const auto& t : a.args)
            if (t.is_var()) out.insert(t);
    return out;
}

Egd Egd::make(std::string id, std::vector<Atom> body, Term lhs, Term rhs) {
    if (body.empty()) throw SchemaError("dependency " + id + " has an empty body");
    reject_nulls(id, body);
    std::vector<Term> vars;
    collect_vars(body, vars);
    for (const auto& side : {lhs, rhs}) {
        if (!side.is_var())
            throw SchemaError("dependency " + id + ": equality sides must be variables");
        if (std::find(vars.begin(), vars.end(), side) == vars.end())
            throw SchemaError("dependency " + id + ": variable " + side.name() +
                              " of the equality does not occur in the body");
    }
    return Egd{std::move(id), std::move(body), lhs, rhs};
}

std::vector<Tgd> Setting::target_tgds() const {
    std::vector<Tgd> out;
    for (const auto& d : t_deps)
        if (const auto* t = std::get_if<Tgd>(&d)) out.push_back(*t);
    return out;
}

std::vector<Egd> Setting::egds() const {
    std::vector<Egd> out;
    for (const auto& d : t_deps)
        if (const auto* e = std::get_if<Egd>(&d)) out.push_back(*e);
    return out;
}

std::vector<Tgd> Setting::all_tgds() const {
    std::vector<Tgd> out = st_tgds;
    for (auto& t : target_tgds()) out.push_back(std::move(t));
    return out;
}

bool Setting::is_tgd_only() const {
    return std::all_of(t_deps.begin(), t_deps.end(),
                       [](const TargetDependency& d) { return std::holds_alternative<Tgd>(d); });
}

std::set<Term> Setting::constants() const {
    std::set<Term> out;
    auto add = [&](const std::vector<Atom>& atoms) {
        for (const auto& a : atoms)
            for (const auto& t : a.args)
                if (t.is_const()) out.insert(t);
    };
    for (const auto& t : st_tgds) {
        add(t.body);
        add(t.head);
    }
    for (const auto& d : t_deps) {
        if (const auto* t = std::get_if<Tgd>(&d)) {
            add(t->body);
            add(t->head);
        } else {
            add(std::get<Egd>(d).body);
        }
    }
    return out;
}

Schema Setting::combined_schema() const {
    Schema out = source;
    out.insert(target.begin(), target.end());
    return out;
}

Setting Setting::without_egds() const {
    Setting out = *this;
    std::erase_if(out.t_deps, [](const TargetDependency& d) { return std::holds_alternative<Egd>(d); });
    return out;
}

void Setting::validate() const {
    for (const auto& [rel, arity] : source) {
        if (target.contains(rel))
            throw SchemaError("relation " + rel.str() + " is declared in both source and target schemas");
    }
    for (const auto& t : st_tgds) {
        check_atoms(t.body, source, t.id, "source");
        check_atoms(t.head, target, t.id, "target");
    }
    for (const auto& d : t_deps) {
        if (const auto* t = std::get_if<Tgd>(&d)) {
            check_atoms(t->body, target, t->id, "target");
            check_atoms(t->head, target, t->id, "target");
        } else {
            const auto& e = std::get<Egd>(d);
            check_atoms(e.body, target, e.id, "target");
        }
    }
}

std::string to_string(const Tgd& t) {
    std::string out = join_atoms(t.body) + " -> ";
    if (t.has_existentials()) {
        out += "exists ";
        for (std::size_t i = 0; i < t.existentials.size(); ++i) {
            if (i) out += ", ";
            out += t.existentials[i].name();
        }
        out += ". ";
    }
    return out + join_atoms(t.head);
}

std::string to_string(const Egd& e) {
    return join_atoms(e.body) + " -> " + to_string(e.lhs) + " = " + to_string(e.rhs);
}

std::string to_string(const Setting& s) {
    std::string out;
    auto decl = [&](const char* kw, const Schema& schema) {
        if (schema.empty()) return;
        out += kw;
        bool first = true;
        for (const auto& [rel, arity] : schema) {
            out += first ? " " : ", ";
            first = false;
            out += rel.str() + "/" + std::to_string(arity);
        }
        out += ".\n";
    };
    decl("source", s.source);
    decl("target", s.target);
    for (const auto& t : s.st_tgds) out += "st: " + to_string(t) + ".\n";
    for (const auto& d : s.t_deps) {
        out += "t: ";
        out += std::visit([](const auto& x) { return to_string(x); }, d);
        out += ".\n";
    }
    return out;
}

void check_instance(const Instance& inst, const Schema& schema, const std::string& what) {
    for (const auto& f : inst) {
        auto it = schema.find(f.relation);
        if (it == schema.end())
            throw SchemaError(what + ": relation " + f.relation.str() + " is not declared");
        if (it->second != f.arity())
            throw SchemaError(what + ": " + to_string(f) + " does not match arity " +
                              std::to_string(it->second));
    }
}

}  // namespace dex
