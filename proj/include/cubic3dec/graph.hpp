#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubic3dec {

using Edge = std::pair<int, int>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph. Edges are stored with u < v, sorted, and indexed
// by position; neighbour lists are sorted and aligned with incident edge ids.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& incident(int v) const { return inc_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

    int edge_id(int u, int v) const;
    int max_degree() const;
    bool is_cubic() const;
    bool is_subcubic() const { return max_degree() <= 3; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::uint64_t> bits_;
};

std::string edge_str(const Edge& e);

bool is_connected(const Graph& g);
std::vector<int> components(const Graph& g, int* count = nullptr);
bool is_three_connected(const Graph& g);
int girth(const Graph& g);  // 0 for forests

// vertex v of g goes to perm[v]
Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace cubic3dec
