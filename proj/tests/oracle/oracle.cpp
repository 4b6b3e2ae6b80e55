#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace oracle {

bool connected_without(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.n(), 0);
    for (int v : removed) gone[v] = 1;
    int start = -1, alive = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> st{start};
    seen[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w = 0; w < g.n(); ++w)
            if (!gone[w] && !seen[w] && g.adjacent(v, w)) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
    }
    return cnt == alive;
}

bool three_connected(const Graph& g) {
    if (g.n() < 4) return false;
    if (!connected_without(g, {})) return false;
    for (int a = 0; a < g.n(); ++a) {
        if (!connected_without(g, {a})) return false;
        for (int b = a + 1; b < g.n(); ++b)
            if (!connected_without(g, {a, b})) return false;
    }
    return true;
}

int girth(const Graph& g) {
    int best = 0;
    int n = g.n();
    std::vector<char> on(n, 0);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
        if (best && len >= best) return;
        for (int w = 0; w < n; ++w) {
            if (!g.adjacent(v, w)) continue;
            if (w == start && len >= 3) {
                if (!best || len < best) best = len;
            } else if (w > start && !on[w]) {
                on[w] = 1;
                dfs(start, w, len + 1);
                on[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        on[s] = 1;
        dfs(s, s, 1);
        on[s] = 0;
    }
    return best;
}

bool has_subgraph(const Graph& host, const Graph& pattern, bool induced) {
    int k = pattern.n();
    std::vector<int> map(k, -1);
    std::vector<char> used(host.n(), 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    bool pe = pattern.adjacent(a, b), he = host.adjacent(map[a], map[b]);
                    if (pe && !he) return false;
                    if (induced && !pe && he) return false;
                }
            return true;
        }
        for (int h = 0; h < host.n(); ++h) {
            if (used[h]) continue;
            used[h] = 1;
            map[i] = h;
            if (rec(i + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    return rec(0);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    int n = a.n();
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) return true;
        for (int h = 0; h < n; ++h) {
            if (used[h] || a.degree(i) != b.degree(h)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(h, map[j]);
            if (!ok) continue;
            used[h] = 1;
            map[i] = h;
            if (rec(i + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    return rec(0);
}

std::int64_t labelled_connected_cubic_rooted(int n) {
    std::vector<int> deg(n, 0);
    std::vector<Edge> edges;
    std::int64_t count = 0;
    std::function<void()> rec = [&]() {
        int v = 0;
        while (v < n && deg[v] == 3) ++v;
        if (v == n) {
            if (Graph(n, edges).n() == n && connected_without(Graph(n, edges), {})) ++count;
            return;
        }
        for (int w = v + 1; w < n; ++w) {
            if (deg[w] == 3) continue;
            bool dup = false;
            for (auto& e : edges)
                if (e == Edge{v, w}) dup = true;
            if (dup) continue;
            if (!edges.empty() && edges.back().first == v && edges.back().second > w) continue;
            ++deg[v];
            ++deg[w];
            edges.emplace_back(v, w);
            rec();
            edges.pop_back();
            --deg[v];
            --deg[w];
        }
    };
    deg[0] = 3;
    for (int w = 1; w <= 3; ++w) {
        edges.emplace_back(0, w);
        deg[w] = 1;
    }
    rec();
    return count;
}

std::set<std::vector<int>> decomposition_trees(const Graph& g) {
    std::set<std::vector<int>> out;
    int n = g.n(), m = g.m();
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int e) {
        if (static_cast<int>(pick.size()) == n - 1) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
            for (int f : pick) {
                int a = find(g.edge(f).first), b = find(g.edge(f).second);
                if (a == b) return;
                parent[a] = b;
            }
            std::vector<char> in(m, 0);
            for (int f : pick) in[f] = 1;
            std::vector<int> rest(n, 0);
            for (int f = 0; f < m; ++f)
                if (!in[f]) {
                    ++rest[g.edge(f).first];
                    ++rest[g.edge(f).second];
                }
            // complement components: cycles have all degrees 2, single edges have both ends degree 1
            std::vector<char> seen(n, 0);
            for (int s = 0; s < n; ++s) {
                if (seen[s] || rest[s] == 0) continue;
                std::vector<int> comp{s};
                seen[s] = 1;
                for (size_t i = 0; i < comp.size(); ++i)
                    for (int f = 0; f < m; ++f) {
                        if (in[f]) continue;
                        auto [a, b] = g.edge(f);
                        int w = a == comp[i] ? b : b == comp[i] ? a : -1;
                        if (w >= 0 && !seen[w]) {
                            seen[w] = 1;
                            comp.push_back(w);
                        }
                    }
                bool cyc = true, single = comp.size() == 2;
                for (int v : comp) {
                    if (rest[v] != 2) cyc = false;
                    if (rest[v] != 1) single = false;
                }
                if (!cyc && !single) return;
            }
            out.insert(pick);
            return;
        }
        if (e == m || m - e < n - 1 - static_cast<int>(pick.size())) return;
        pick.push_back(e);
        rec(e + 1);
        pick.pop_back();
        rec(e + 1);
    };
    rec(0);
    return out;
}

std::set<std::vector<int>> consistent_forest_trees(const Graph& g, const std::vector<char>& outer) {
    std::set<std::vector<int>> out;
    int n = g.n(), m = g.m();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        auto in = [&](int e) { return (mask >> e & 1) != 0; };
        // tree part: acyclic, each component reaches an outer vertex
        std::vector<int> comp(n, -1);
        bool ok = true;
        int edges_seen = 0;
        for (int s = 0; s < n && ok; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s}, members{s};
            comp[s] = s;
            int inner_edges = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e = 0; e < m; ++e) {
                    if (!in(e)) continue;
                    auto [a, b] = g.edge(e);
                    if (a != v && b != v) continue;
                    ++inner_edges;
                    int w = a == v ? b : a;
                    if (comp[w] < 0) {
                        comp[w] = s;
                        stack.push_back(w);
                        members.push_back(w);
                    }
                }
            }
            inner_edges /= 2;
            edges_seen += inner_edges;
            if (inner_edges != static_cast<int>(members.size()) - 1) ok = false;
            bool reach = false;
            for (int v : members) reach = reach || outer[v];
            if (!reach) ok = false;
        }
        if (!ok) continue;
        // complement components
        std::vector<int> deg(n, 0);
        for (int e = 0; e < m; ++e)
            if (!in(e)) ++deg[g.edge(e).first], ++deg[g.edge(e).second];
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n && ok; ++s) {
            if (seen[s] || deg[s] == 0) continue;
            std::vector<int> members{s};
            seen[s] = 1;
            for (size_t i = 0; i < members.size(); ++i)
                for (int e = 0; e < m; ++e) {
                    if (in(e)) continue;
                    auto [a, b] = g.edge(e);
                    int w = a == members[i] ? b : b == members[i] ? a : -1;
                    if (w >= 0 && !seen[w]) {
                        seen[w] = 1;
                        members.push_back(w);
                    }
                }
            int k = static_cast<int>(members.size()), ones = 0, twos = 0, outer_ones = 0;
            for (int v : members) {
                if (deg[v] == 1) ++ones, outer_ones += outer[v] ? 1 : 0;
                if (deg[v] == 2) ++twos;
            }
            bool single = k == 2 && ones == 2;
            bool cycle = twos == k;
            bool path = ones == 2 && twos == k - 2 && outer_ones == 2;
            if (!single && !cycle && !path) ok = false;
        }
        if (!ok) continue;
        std::vector<int> t;
        for (int e = 0; e < m; ++e)
            if (in(e)) t.push_back(e);
        out.insert(t);
    }
    return out;
}

bool satisfiable(int vars, const std::vector<std::vector<int>>& clauses) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars); ++a) {
        bool all = true;
        for (const auto& c : clauses) {
            bool any = false;
            for (int l : c) {
                bool val = (a >> (std::abs(l) - 1) & 1) != 0;
                any = any || (l > 0 ? val : !val);
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace oracle

namespace oracle {

namespace {

// all ordered k-tuples of distinct vertices
void tuples(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> t(k, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            f(t);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (std::find(t.begin(), t.begin() + i, v) != t.begin() + i) continue;
            t[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

bool edge_in(const Graph& g, int a, int b) {
    for (auto e : g.edges())
        if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) return true;
    return false;
}

}  // namespace

bool short_cycles_chordless(const Graph& g) {
    bool ok = true;
    for (int k = 4; k <= 6; ++k)
        tuples(g.n(), k, [&](const std::vector<int>& t) {
            for (int i = 0; i < k; ++i)
                if (!edge_in(g, t[i], t[(i + 1) % k])) return;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    int d = std::abs(i - j);
                    if (d > 1 && d < k - 1 && edge_in(g, t[i], t[j])) ok = false;
                }
        });
    return ok;
}

bool every_edge_p6_centre(const Graph& g) {
    std::set<Edge> centres;
    tuples(g.n(), 6, [&](const std::vector<int>& t) {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (edge_in(g, t[i], t[j]) != (j == i + 1)) return;
        centres.insert({std::min(t[2], t[3]), std::max(t[2], t[3])});
    });
    return static_cast<int>(centres.size()) == g.m();
}

}  // namespace oracle

namespace oracle {

bool is_three_decomposition(const Graph& g, const std::string& labels) {
    if (static_cast<int>(labels.size()) != g.m()) return false;
    std::vector<int> cdeg(g.n(), 0), mdeg(g.n(), 0);
    std::vector<int> comp(g.n());
    std::iota(comp.begin(), comp.end(), 0);
    int tree_edges = 0;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        switch (labels[e]) {
            case 'T': {
                // relabel the whole component; quadratic and obviously right
                int a = comp[u], b = comp[v];
                if (a == b) return false;
                for (int& c : comp)
                    if (c == b) c = a;
                ++tree_edges;
                break;
            }
            case 'C':
                ++cdeg[u], ++cdeg[v];
                break;
            case 'M':
                ++mdeg[u], ++mdeg[v];
                break;
            default:
                return false;
        }
    }
    if (tree_edges != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if ((cdeg[v] != 0 && cdeg[v] != 2) || mdeg[v] > 1) return false;
    return true;
}

}  // namespace oracle
