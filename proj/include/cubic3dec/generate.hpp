#pragma once

#include <vector>

#include "cubic3dec/graph.hpp"

namespace cubic3dec {

// All connected cubic graphs on n vertices, one per isomorphism class, in
// canonical form and sorted by graph6 string. Built from smaller orders by
// edge insertion, diamond insertion and attaching a subdivided K4.
std::vector<Graph> connected_cubic_graphs(int n);

}  // namespace cubic3dec
