#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic3dec/decomp.hpp"
#include "cubic3dec/extend.hpp"
#include "cubic3dec/templates.hpp"

namespace cubic3dec {

// Gate outcomes per pair name, over every copy examined.
struct GateStats {
    std::map<std::string, std::map<GateStatus, std::uint64_t>> counts;
    void add(const std::string& pair, GateStatus s) { ++counts[pair][s]; }
};

struct ConfigMatch {
    const TransformationPair* pair = nullptr;
    Embedding emb_y;          // copy of c(pair.y) in the host
    TransformResult reduced;  // gate-approved reduction
    bool edge_gate_failed = false;  // domino taken to the square after the edge reduction failed
};

// Searches triangle, K_{2,3}, domino (edge first, then square), twin-house,
// claw-square, petv; returns the first copy whose reduction passes the gate.
std::optional<ConfigMatch> find_configuration(const Graph& g, GateStats* stats = nullptr);

struct TraceStep {
    std::string pair;
    std::vector<int> phi;  // host vertices of the reduced copy
    int n_before = 0;
    int forest_class = -1;
    std::string rule;
    bool edge_gate_failed = false;
};

struct PipelineResult {
    SolveStatus status = SolveStatus::Unknown;
    ThreeDecomposition decomposition;
    std::vector<TraceStep> trace;
    Graph base;
    ThreeDecomposition base_decomposition;
    std::uint64_t nodes = 0;
};

// Every intermediate graph is re-verified as simple, cubic and 3-connected;
// a failed re-check throws std::logic_error.
PipelineResult solve_via_reduction(const Graph& g, const SolveOptions& opt = default_solve_options(),
                                   GateStats* stats = nullptr, std::vector<Graph>* intermediates = nullptr);

// Re-runs the recorded reductions from the trace and lifts the recorded base
// decomposition; returns the decomposition of g.
ThreeDecomposition replay_trace(const Graph& g, const std::vector<TraceStep>& trace,
                                const ThreeDecomposition& base_decomposition);

std::string format_trace(const PipelineResult& r);

struct CounterexampleReport {
    bool girth_ok = false;
    bool short_cycles_induced = false;
    bool p6_centres = false;
    std::vector<std::string> configurations;  // builtin cores present as subgraphs
};

CounterexampleReport check_min_counterexample_properties(const Graph& g);

}  // namespace cubic3dec
