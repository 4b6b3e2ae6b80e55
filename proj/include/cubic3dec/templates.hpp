#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic3dec/graph.hpp"

namespace cubic3dec {

// Inner vertices are 0..core_size-1; outer label i is vertex core_size + i.
struct TemplateGraph {
    std::string name;
    Graph graph;
    int core_size = 0;
    std::vector<std::string> names;

    int outer_count() const { return graph.n() - core_size; }
    bool is_outer(int v) const { return v >= core_size; }
    int outer_vertex(int label) const { return core_size + label; }
    int attachment(int label) const { return graph.neighbors(core_size + label)[0]; }
    Graph core() const;
    std::vector<char> outer_mask() const;
    std::string vertex_name(int v) const;
    std::string edge_name(int e) const;
};

// Throws std::invalid_argument when the invariants fail.
void validate(const TemplateGraph& t);

TemplateGraph make_template(const Graph& core, std::string name = "");
// attach[i] is the core vertex carrying outer label i
TemplateGraph template_from_core(std::string name, const Graph& core, const std::vector<int>& attach,
                                 std::vector<std::string> core_names = {});

struct Embedding {
    std::vector<int> phi;  // core vertex -> host vertex
    std::vector<int> psi;  // outer label -> host vertex
    bool operator==(const Embedding&) const = default;
};

// Empty string when valid.
std::string check_embedding(const Graph& host, const TemplateGraph& t, const Embedding& emb, bool require_induced);

// psi filled from the outside neighbours of each image vertex, -1 where they
// do not match the template's outer count.
Embedding embedding_from_match(const Graph& host, const TemplateGraph& t, const std::vector<int>& phi);

void for_each_embedding(const Graph& host, const TemplateGraph& t,
                        const std::function<bool(const Embedding&)>& visit);
std::vector<Embedding> embeddings(const Graph& host, const TemplateGraph& t);

struct TransformationPair {
    std::string name;
    TemplateGraph x;  // smaller core
    TemplateGraph y;
};

struct NonSimpleResult : std::runtime_error {
    NonSimpleResult(int core_vertex, int host_vertex)
        : std::runtime_error("attachment of core vertex " + std::to_string(core_vertex) + " to host vertex " +
                             std::to_string(host_vertex) + " duplicates an edge"),
          core_vertex(core_vertex), host_vertex(host_vertex) {}
    int core_vertex, host_vertex;
};

struct TransformResult {
    Graph graph;
    std::vector<int> host_map;  // host vertex -> result vertex, -1 if removed
    std::vector<int> core_map;  // core vertex of the target template -> result vertex
    Embedding embedding;       // target template in the result
};

// Replaces the copy of c(from) at emb by c(to); kept host vertices keep their
// relative order, the new core follows.
TransformResult apply_transformation(const Graph& host, const TemplateGraph& from, const TemplateGraph& to,
                                     const Embedding& emb);
TransformResult extend(const Graph& host, const TransformationPair& pair, const Embedding& emb_x);
TransformResult reduce(const Graph& host, const TransformationPair& pair, const Embedding& emb_y);

enum class GateStatus { Pass, NotInduced, NonSimple, NotThreeConnected };

struct GateResult {
    GateStatus status = GateStatus::Pass;
    std::string detail;
    std::optional<TransformResult> result;
    bool pass() const { return status == GateStatus::Pass; }
};

const char* gate_name(GateStatus s);

// Reduces the host's copy of c(pair.y) to c(pair.x).
GateResult reduction_gate(const Graph& host, const TransformationPair& pair, const Embedding& emb_y);

const std::vector<TransformationPair>& builtin_pairs();
const TransformationPair& find_pair(const std::string& name);
const TemplateGraph& builtin_template(const std::string& name);

// Automorphisms of x paired with an automorphism of y acting identically on
// the outer labels.
struct PairSymmetry {
    std::vector<int> x, y;
};
std::vector<PairSymmetry> pair_symmetries(const TransformationPair& pair);
std::vector<std::vector<int>> template_automorphisms(const TemplateGraph& t);

std::string serialize_template(const TemplateGraph& t);
std::string serialize_pair(const TransformationPair& p);
TransformationPair parse_pair(const std::string& text);

}  // namespace cubic3dec
