#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic3dec/decomp.hpp"
#include "cubic3dec/label_search.hpp"
#include "cubic3dec/templates.hpp"

namespace cubic3dec {

// A 3-consistent spanning forest of a template, stored by its edge labels.
struct ConsistentForest {
    std::shared_ptr<const TemplateGraph> tmpl;
    std::vector<Label> labels;      // per template edge
    std::vector<Label> assignment;  // per outer label
    std::vector<int> component;     // per outer label: smallest outer label in the same T component

    std::string str() const { return labels_str(labels); }
    bool operator==(const ConsistentForest& o) const { return labels == o.labels; }
    bool operator<(const ConsistentForest& o) const { return labels < o.labels; }
};

// nullopt unless the tree edges form a 3-consistent forest.
std::optional<ConsistentForest> forest_from_tree(const TemplateGraph& t, const std::vector<char>& tree);
// Derived from the T labels; nullopt when the C/M labels disagree with them.
std::optional<ConsistentForest> forest_from_labels(const TemplateGraph& t, const std::vector<Label>& labels);

// Sorted by label string.
std::vector<ConsistentForest> enumerate_consistent_forests(const TemplateGraph& t);

// result(a, b) = f(sigma a, sigma b) for an automorphism sigma of the template.
ConsistentForest permute_forest(const ConsistentForest& f, const std::vector<int>& sigma);

// Orbit index per forest under a group of template automorphisms; orbits are
// numbered by their first member.
std::vector<int> forest_orbits(const std::vector<ConsistentForest>& forests,
                               const std::vector<std::vector<int>>& group);

// Restriction of a host decomposition to an embedded template; throws
// std::logic_error when it is not 3-consistent.
ConsistentForest restrict_decomposition(const Graph& host, const ThreeDecomposition& d, const TemplateGraph& t,
                                        const Embedding& emb);

std::optional<ConsistentForest> is_naively_extendable(const ConsistentForest& fx, const TemplateGraph& y);
std::vector<ConsistentForest> naive_witnesses(const ConsistentForest& fx, const TemplateGraph& y);

struct Realization {
    SearchStatus status = SearchStatus::Complete;
    std::optional<ConsistentForest> forest;
    std::uint64_t nodes = 0;
};

// Any 3-consistent forest of y realising the assignment.
Realization realize_assignment(const TemplateGraph& y, const std::vector<Label>& assignment, std::uint64_t budget = 0);

struct CompatEntry {
    ConsistentForest forest;
    std::optional<ConsistentForest> witness;
    int orbit = 0;      // under the pair's symmetries
    std::string rule;   // manual rule id, empty when naive or uncovered
};

struct CompatReport {
    TransformationPair pair;
    std::vector<CompatEntry> entries;  // aligned with enumerate_consistent_forests(pair.x)
    int naive_count() const;
    int manual_count() const;
    int manual_classes() const;
    bool complete() const;  // every non-naive forest has a rule
};

CompatReport check_compatibility(const TransformationPair& pair);
// Computed once per pair name and kept.
const CompatReport& compatibility(const TransformationPair& pair);
std::string format_report(const CompatReport& r);

struct ManualCaseUnresolved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Manual rule registered for a forest of pair.x, if any; searched through
// the pair symmetries.
std::optional<std::string> manual_rule_for(const TransformationPair& pair, const ConsistentForest& fx);

struct LiftResult {
    TransformResult extended;
    ThreeDecomposition decomposition;
    int forest_index = -1;  // position in the sorted forest list of pair.x
    std::string rule;       // "naive" or a manual rule id
};

// Extends the copy of c(pair.x) at emb_x and carries d along; the output is
// verified before it is returned.
LiftResult lift_decomposition(const Graph& host, const ThreeDecomposition& d, const TransformationPair& pair,
                              const Embedding& emb_x);

// Square behaviours in the order u1u2 u1u3 u2u4 u3u4 v1 v2 v3 v4.
std::string square_string(const ConsistentForest& f);
const std::vector<std::string>& square_representatives();
// 1-based index among the representatives, 0 when eliminated.
int square_representative(const ConsistentForest& f);

struct SwitchResult {
    ThreeDecomposition decomposition;
    std::vector<std::string> steps;  // switch family per rewrite
};

// Rewrites d locally until its square behaviour is a representative.
SwitchResult switch_to_representative(const Graph& host, const ThreeDecomposition& d, const Embedding& square);

}  // namespace cubic3dec
