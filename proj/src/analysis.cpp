#include "dex/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dex {

DependencyGraph dependency_graph(const std::vector<Tgd>& tgds, const Schema& schema) {
    DependencyGraph g;
    for (const auto& [rel, arity] : schema)
        for (std::size_t i = 1; i <= arity; ++i) g.nodes.insert({rel, i});

    auto positions_of = [](const std::vector<Atom>& atoms, const Term& v) {
        std::vector<Position> out;
        for (const auto& a : atoms)
            for (std::size_t i = 0; i < a.arity(); ++i)
                if (a.args[i] == v) out.push_back({a.relation, i + 1});
        return out;
    };

    for (const auto& t : tgds) {
        for (const auto* atoms : {&t.body, &t.head})
            for (const auto& a : *atoms)
                for (std::size_t i = 1; i <= a.arity(); ++i) g.nodes.insert({a.relation, i});

        std::vector<Position> existential_positions;
        for (const auto& z : t.existentials) {
            auto ps = positions_of(t.head, z);
            existential_positions.insert(existential_positions.end(), ps.begin(), ps.end());
        }
        for (const auto& x : t.frontier) {
            auto head_ps = positions_of(t.head, x);
            for (const auto& from : positions_of(t.body, x)) {
                for (const auto& to : head_ps) g.normal_edges.insert({from, to});
                for (const auto& to : existential_positions) g.special_edges.insert({from, to});
            }
        }
    }
    return g;
}

std::map<Position, std::size_t> strongly_connected_components(const DependencyGraph& g) {
    std::map<Position, std::vector<Position>> adj;
    for (const auto* edges : {&g.normal_edges, &g.special_edges})
        for (const auto& [a, b] : *edges) adj[a].push_back(b);

    std::map<Position, std::size_t> index, low, comp;
    std::vector<Position> stack;
    std::set<Position> on_stack;
    std::size_t counter = 0, n_comp = 0;

    std::function<void(const Position&)> visit = [&](const Position& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& w : adj[v]) {
            if (!index.contains(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack.contains(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                Position w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp[w] = n_comp;
                if (w == v) break;
            }
            ++n_comp;
        }
    };

    std::set<Position> all = g.nodes;
    for (const auto& [a, bs] : adj) {
        all.insert(a);
        all.insert(bs.begin(), bs.end());
    }
    for (const auto& v : all)
        if (!index.contains(v)) visit(v);
    return comp;
}

bool is_weakly_acyclic(const DependencyGraph& g) {
    auto comp = strongly_connected_components(g);
    return std::none_of(g.special_edges.begin(), g.special_edges.end(),
                        [&](const auto& e) { return comp.at(e.first) == comp.at(e.second); });
}

bool is_weakly_acyclic(const Setting& setting) {
    return is_weakly_acyclic(dependency_graph(setting.target_tgds(), setting.target));
}

std::string to_dot(const DependencyGraph& g) {
    auto name = [](const Position& p) { return "\"" + to_string(p) + "\""; };
    std::string out = "digraph dependencies {\n";
    for (const auto& n : g.nodes) out += "  " + name(n) + ";\n";
    for (const auto& [a, b] : g.normal_edges) out += "  " + name(a) + " -> " + name(b) + ";\n";
    for (const auto& [a, b] : g.special_edges)
        out += "  " + name(a) + " -> " + name(b) + " [style=dashed, label=\"*\"];\n";
    return out + "}\n";
}

}  // namespace dex
