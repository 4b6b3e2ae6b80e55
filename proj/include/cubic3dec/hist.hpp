#pragma once

#include <string>
#include <vector>

#include "cubic3dec/decomp.hpp"
#include "cubic3dec/graph.hpp"

namespace cubic3dec {

// Cubic graph with its green edges forming a spanning tree.
struct ColouredGraph {
    Graph graph;
    std::vector<char> green;  // per edge id

    static ColouredGraph from(const Graph& g, const ThreeDecomposition& d);
    std::vector<Edge> tree() const;
    ThreeDecomposition decomposition() const;  // C and M recovered from the black complement
};

enum class StepKind { TutteReduction, DiamondReduction };

// Vertex ids refer to the graph before the reduction. removed_vertices are
// in role order: Tutte [a, b] where a subdivides restored_edges[0] and b
// subdivides restored_edges[1]; diamond [d1, d2, d3, d4] with d1 next to
// restored_edges[0].first and d4 next to restored_edges[0].second.
struct ReductionStep {
    StepKind kind = StepKind::TutteReduction;
    char proof_case = 'a';
    int n_before = 0;
    std::vector<int> removed_vertices;
    std::vector<Edge> restored_edges;
};

// Extension description in the ids of the graph being extended: targets are
// green edges, new_ids the ids the inserted vertices take in the result.
struct ExtensionSpec {
    StepKind kind = StepKind::TutteReduction;
    std::vector<Edge> targets;
    std::vector<int> new_ids;
};

ColouredGraph apply_reduction(const ColouredGraph& cg, const ReductionStep& step);
ExtensionSpec inverse(const ReductionStep& step);
ColouredGraph tutte_or_diamond_extend(const ColouredGraph& cg, const ExtensionSpec& spec);
ColouredGraph tutte_extend(const ColouredGraph& cg, const Edge& e1, const Edge& e2);
ColouredGraph diamond_extend(const ColouredGraph& cg, const Edge& e);

struct HistResult {
    ColouredGraph terminal;
    std::vector<ReductionStep> steps;
};

HistResult hist_reduce(const Graph& g, const ThreeDecomposition& d);

// Replays the inverse extensions from the terminal back to the input.
ColouredGraph replay(const HistResult& r);

std::string step_str(const ReductionStep& s);

}  // namespace cubic3dec
