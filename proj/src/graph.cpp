#include "cubic3dec/graph.hpp"

#include <algorithm>
#include <functional>

namespace cubic3dec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    words_ = (n + 63) / 64;
    if (words_ == 0) words_ = 1;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + edge_str({u, v}) + " out of range");
        if (u == v) throw GraphError("self-loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw GraphError("parallel edge " + edge_str(edges[i]));
    edges_ = std::move(edges);
    adj_.assign(n, {});
    inc_.assign(n, {});
    for (int e = 0; e < m(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        inc_[u].push_back(e);
        adj_[v].push_back(u);
        inc_[v].push_back(e);
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> idx(adj_[v].size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<int> a, c;
        for (int i : idx) {
            a.push_back(adj_[v][i]);
            c.push_back(inc_[v][i]);
        }
        adj_[v] = std::move(a);
        inc_[v] = std::move(c);
    }
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) return -1;
    const auto& a = adj_[u];
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == v) return inc_[u][i];
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_cubic() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 3) return false;
    return true;
}

std::string edge_str(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

std::vector<int> components(const Graph& g, int* count) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const Graph& g) {
    int c = 0;
    components(g, &c);
    return c <= 1;
}

namespace {

// true if g minus `blocked` is connected and has no cut vertex
bool biconnected_without(const Graph& g, int blocked) {
    int n = g.n();
    int root = blocked == 0 ? 1 : 0;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<size_t> it(n, 0);
    int t = 0, reached = 0, root_children = 0;
    std::vector<int> stack{root};
    disc[root] = low[root] = t++;
    ++reached;
    while (!stack.empty()) {
        int v = stack.back();
        const auto& nb = g.neighbors(v);
        if (it[v] < nb.size()) {
            int w = nb[it[v]++];
            if (w == blocked) continue;
            if (disc[w] < 0) {
                parent[w] = v;
                disc[w] = low[w] = t++;
                ++reached;
                if (v == root) ++root_children;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) return false;
            }
        }
    }
    if (reached != n - 1) return false;
    return root_children <= 1;
}

}  // namespace

bool is_three_connected(const Graph& g) {
    if (g.n() < 4) return false;
    if (!is_connected(g)) return false;
    for (int x = 0; x < g.n(); ++x)
        if (!biconnected_without(g, x)) return false;
    return true;
}

int girth(const Graph& g) {
    int best = 0;
    std::vector<int> dist(g.n()), par(g.n()), queue(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        par[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            if (best && 2 * dist[v] + 1 >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    queue[tail++] = w;
                } else if (w != par[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (!best || len < best) best = len;
                }
            }
        }
    }
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    es.reserve(g.m());
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), std::move(es));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(es));
}

}  // namespace cubic3dec
