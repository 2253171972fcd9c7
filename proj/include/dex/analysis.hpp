#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dex/dependency.hpp"

namespace dex {

struct DependencyGraph {
    using Edge = std::pair<Position, Position>;

    std::set<Position> nodes;
    std::set<Edge> normal_edges;
    std::set<Edge> special_edges;
};

/// Nodes are every position of `schema` plus every position the TGDs use.
DependencyGraph dependency_graph(const std::vector<Tgd>& tgds, const Schema& schema = {});

/// Strongly connected components (Tarjan), as component index per node.
std::map<Position, std::size_t> strongly_connected_components(const DependencyGraph& g);

bool is_weakly_acyclic(const DependencyGraph& g);
bool is_weakly_acyclic(const Setting& setting);

std::string to_dot(const DependencyGraph& g);

}  // namespace dex
