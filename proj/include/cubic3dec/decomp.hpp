#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubic3dec/graph.hpp"
#include "cubic3dec/labels.hpp"

namespace cubic3dec {

// Labels indexed by edge id of the host graph.
struct ThreeDecomposition {
    std::vector<Label> labels;
    bool operator==(const ThreeDecomposition&) const = default;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

VerifyResult verify(const Graph& g, const ThreeDecomposition& d);

std::vector<Edge> tree_edges(const Graph& g, const ThreeDecomposition& d);

// C = cycle components of the complement, M = single-edge components; a
// longer path component is rejected.
VerifyResult decomposition_from_tree(const Graph& g, const std::vector<Edge>& tree, ThreeDecomposition& out);

bool is_hist(const Graph& g, const std::vector<Edge>& tree);

enum class SolveStatus { Found, None, Unknown };

struct SolveOptions {
    std::uint64_t budget = 0;  // search nodes for the exhaustive phase; 0 = unlimited
    bool heuristic = true;
    int restarts = 200;
    std::uint64_t seed = 1;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    ThreeDecomposition decomposition;
    std::uint64_t nodes = 0;
    bool by_heuristic = false;
};

// Seed from CUBIC3DEC_SEED when set.
SolveOptions default_solve_options();

SolveResult solve(const Graph& g, const SolveOptions& opt = default_solve_options());
std::optional<ThreeDecomposition> solve_heuristic(const Graph& g, int restarts, std::uint64_t seed);
SolveResult solve_exhaustive(const Graph& g, std::uint64_t budget = 0);

// Every 3-decomposition of g, in search order; visit returns false to stop.
void enumerate_decompositions(const Graph& g, const std::function<bool(const ThreeDecomposition&)>& visit);

struct Certificate {
    Graph graph;
    std::vector<Edge> tree;
};

std::string write_certificate(const Graph& g, const ThreeDecomposition& d);
std::vector<Edge> parse_tree_line(const std::string& line);
std::string tree_line(const std::vector<Edge>& tree);

}  // namespace cubic3dec
