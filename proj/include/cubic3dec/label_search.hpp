#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubic3dec/graph.hpp"
#include "cubic3dec/labels.hpp"

namespace cubic3dec {

constexpr std::uint8_t kAnyLabel = 7;

// Edge labelling problem shared by the decomposition solver, forest
// enumeration and the extendability searches. Inner vertices (degree 3) must
// see one of TTT, TTM, TCC; outer vertices are unconstrained. In spanning
// mode T must be a spanning tree; otherwise T is a forest whose components
// each contain an outer vertex.
struct LabelProblem {
    const Graph* graph = nullptr;
    std::vector<char> outer;           // empty: no outer vertices
    bool spanning = true;
    std::vector<std::uint8_t> allowed;  // per edge label mask; empty: any
    std::vector<int> group;            // per vertex; vertices sharing a group id >= 0 must share a T-component, different ids must not
};

enum class SearchStatus { Complete, Stopped, Budget };

struct SearchStats {
    std::uint64_t nodes = 0;
    SearchStatus status = SearchStatus::Complete;
};

// budget 0 means unlimited. visit returns false to stop.
SearchStats label_search(const LabelProblem& p, std::uint64_t budget,
                         const std::function<bool(const std::vector<Label>&)>& visit);

}  // namespace cubic3dec
