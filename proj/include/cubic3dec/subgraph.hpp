#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubic3dec/graph.hpp"

namespace cubic3dec {

struct SubgraphMatch {
    std::vector<int> vertex_map;  // pattern vertex -> host vertex
    bool induced = false;
};

// Calls visit for every match in search order; stops when visit returns false.
void for_each_subgraph(const Graph& host, const Graph& pattern, bool induced,
                       const std::function<bool(const std::vector<int>&)>& visit);

std::optional<SubgraphMatch> find_subgraph(const Graph& host, const Graph& pattern, bool require_induced);

bool are_isomorphic(const Graph& a, const Graph& b);
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
std::vector<std::vector<int>> automorphisms(const Graph& g);

// Canonical relabelling by colour refinement plus individualisation; two
// graphs are isomorphic iff their canonical forms are equal.
std::vector<int> canonical_labelling(const Graph& g);
Graph canonical_graph(const Graph& g);
std::string canonical_form(const Graph& g);

}  // namespace cubic3dec
