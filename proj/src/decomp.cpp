#include "cubic3dec/decomp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cubic3dec/graph6.hpp"
#include "cubic3dec/label_search.hpp"

namespace cubic3dec {

namespace {

struct DisjointSets {
    std::vector<int> p;
    explicit DisjointSets(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

VerifyResult fail(std::string s) { return {false, std::move(s)}; }

// complement components: 0 ok, otherwise the number of path edges beyond the
// first in every path component (0 iff only cycles and single edges)
int complement_defect(const Graph& g, const std::vector<char>& in_tree, int* witness = nullptr,
                      std::vector<Label>* labels = nullptr) {
    int n = g.n();
    std::vector<int> deg(n, 0);
    for (int e = 0; e < g.m(); ++e)
        if (!in_tree[e]) {
            ++deg[g.edge(e).first];
            ++deg[g.edge(e).second];
        }
    std::vector<int> comp(n, -1);
    std::vector<int> stack, verts;
    int defect = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0 || deg[s] == 0) continue;
        verts.clear();
        stack.push_back(s);
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (size_t k = 0; k < g.neighbors(v).size(); ++k) {
                int e = g.incident(v)[k], w = g.neighbors(v)[k];
                if (!in_tree[e] && comp[w] < 0) {
                    comp[w] = s;
                    stack.push_back(w);
                }
            }
        }
        bool cycle = true;
        int ends = 0;
        for (int v : verts) {
            if (deg[v] != 2) cycle = false;
            if (deg[v] == 1) ++ends;
        }
        bool single = verts.size() == 2 && ends == 2;
        if (!cycle && !single) {
            defect += static_cast<int>(verts.size()) - 2;
            if (witness && defect > 0 && *witness < 0) *witness = s;
        }
        if (labels)
            for (int v : verts)
                for (int e : g.incident(v))
                    if (!in_tree[e]) (*labels)[e] = cycle ? Label::C : Label::M;
    }
    return defect;
}

}  // namespace

VerifyResult verify(const Graph& g, const ThreeDecomposition& d) {
    if (static_cast<int>(d.labels.size()) != g.m())
        throw std::invalid_argument("label map has " + std::to_string(d.labels.size()) + " entries for " +
                                    std::to_string(g.m()) + " edges");
    int n = g.n();
    int t = 0;
    for (auto l : d.labels) t += l == Label::T;
    if (t != n - 1)
        return fail("T has " + std::to_string(t) + " edges, a spanning tree needs " + std::to_string(n - 1));
    DisjointSets ds(n);
    for (int e = 0; e < g.m(); ++e)
        if (d.labels[e] == Label::T && !ds.unite(g.edge(e).first, g.edge(e).second))
            return fail("T contains a cycle through edge " + edge_str(g.edge(e)));
    for (int v = 1; v < n; ++v)
        if (ds.find(v) != ds.find(0)) return fail("T does not reach vertex " + std::to_string(v));
    for (int v = 0; v < n; ++v) {
        int c = 0, mm = 0;
        for (int e : g.incident(v)) {
            c += d.labels[e] == Label::C;
            mm += d.labels[e] == Label::M;
        }
        if (c != 0 && c != 2)
            return fail("C is not 2-regular: vertex " + std::to_string(v) + " has C-degree " + std::to_string(c));
        if (mm > 1)
            return fail("M is not a matching: vertex " + std::to_string(v) + " has M-degree " + std::to_string(mm));
    }
    return {true, "ok"};
}

std::vector<Edge> tree_edges(const Graph& g, const ThreeDecomposition& d) {
    std::vector<Edge> out;
    for (int e = 0; e < g.m(); ++e)
        if (d.labels[e] == Label::T) out.push_back(g.edge(e));
    return out;
}

VerifyResult decomposition_from_tree(const Graph& g, const std::vector<Edge>& tree, ThreeDecomposition& out) {
    std::vector<char> in(g.m(), 0);
    for (auto [u, v] : tree) {
        int e = g.edge_id(u, v);
        if (e < 0) return fail("tree edge " + edge_str({u, v}) + " is not an edge of the graph");
        if (in[e]) return fail("tree edge " + edge_str(g.edge(e)) + " listed twice");
        in[e] = 1;
    }
    if (static_cast<int>(tree.size()) != g.n() - 1)
        return fail("tree has " + std::to_string(tree.size()) + " edges, expected " + std::to_string(g.n() - 1));
    DisjointSets ds(g.n());
    for (int e = 0; e < g.m(); ++e)
        if (in[e] && !ds.unite(g.edge(e).first, g.edge(e).second))
            return fail("tree contains a cycle through edge " + edge_str(g.edge(e)));
    std::vector<Label> labels(g.m(), Label::T);
    int witness = -1;
    if (complement_defect(g, in, &witness, &labels) > 0)
        return fail("complement has a path of length >= 2 at vertex " + std::to_string(witness));
    out.labels = std::move(labels);
    return verify(g, out);
}

bool is_hist(const Graph& g, const std::vector<Edge>& tree) {
    if (static_cast<int>(tree.size()) != g.n() - 1) throw std::invalid_argument("not a spanning tree");
    DisjointSets ds(g.n());
    std::vector<int> deg(g.n(), 0);
    for (auto [u, v] : tree) {
        if (g.edge_id(u, v) < 0 || !ds.unite(u, v)) throw std::invalid_argument("not a spanning tree");
        ++deg[u];
        ++deg[v];
    }
    return std::none_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
}

SolveOptions default_solve_options() {
    SolveOptions o;
    if (const char* s = std::getenv("CUBIC3DEC_SEED")) o.seed = std::strtoull(s, nullptr, 10);
    return o;
}

namespace {

std::vector<char> greedy_tree(const Graph& g, std::mt19937_64& rng) {
    int n = g.n();
    std::vector<char> in_tree(g.m(), 0), reached(n, 0);
    std::vector<int> tdeg(n, 0);
    auto grow = [&](int v) {
        for (size_t k = 0; k < 3; ++k) {
            int w = g.neighbors(v)[k];
            if (!reached[w]) {
                reached[w] = 1;
                in_tree[g.incident(v)[k]] = 1;
                ++tdeg[v];
                ++tdeg[w];
            }
        }
    };
    int root = static_cast<int>(rng() % n);
    reached[root] = 1;
    grow(root);
    int count = 1 + tdeg[root];
    std::vector<int> full, partial;
    while (count < n) {
        full.clear();
        partial.clear();
        for (int v = 0; v < n; ++v) {
            if (!reached[v]) continue;
            int open = 0;
            for (int w : g.neighbors(v)) open += !reached[w];
            if (!open) continue;
            (tdeg[v] + open == 3 ? full : partial).push_back(v);
        }
        int v;
        if (!full.empty()) {
            v = full[rng() % full.size()];
            grow(v);
        } else {
            v = partial[rng() % partial.size()];
            std::vector<int> ks;
            for (int k = 0; k < 3; ++k)
                if (!reached[g.neighbors(v)[k]]) ks.push_back(k);
            int k = ks[rng() % ks.size()];
            int w = g.neighbors(v)[k];
            reached[w] = 1;
            in_tree[g.incident(v)[k]] = 1;
            ++tdeg[v];
            ++tdeg[w];
        }
        count = 0;
        for (int x = 0; x < n; ++x) count += reached[x];
    }
    return in_tree;
}

// tree edge ids on the tree path between a and b
std::vector<int> tree_path(const Graph& g, const std::vector<char>& in_tree, int a, int b) {
    std::vector<int> via(g.n(), -2);
    std::vector<int> q{a};
    via[a] = -1;
    for (size_t i = 0; i < q.size() && via[b] == -2; ++i) {
        int v = q[i];
        for (size_t k = 0; k < g.neighbors(v).size(); ++k) {
            int e = g.incident(v)[k], w = g.neighbors(v)[k];
            if (in_tree[e] && via[w] == -2) {
                via[w] = e;
                q.push_back(w);
            }
        }
    }
    std::vector<int> path;
    for (int v = b; v != a;) {
        int e = via[v];
        path.push_back(e);
        v = g.other(e, v);
    }
    return path;
}

bool repair(const Graph& g, std::vector<char>& in_tree, std::mt19937_64& rng) {
    int score = complement_defect(g, in_tree);
    for (int iter = 0; iter < 4 * g.n() && score > 0; ++iter) {
        std::vector<int> outside;
        for (int e = 0; e < g.m(); ++e)
            if (!in_tree[e]) outside.push_back(e);
        std::shuffle(outside.begin(), outside.end(), rng);
        bool improved = false;
        for (int e : outside) {
            for (int f : tree_path(g, in_tree, g.edge(e).first, g.edge(e).second)) {
                in_tree[e] = 1;
                in_tree[f] = 0;
                int s = complement_defect(g, in_tree);
                if (s < score) {
                    score = s;
                    improved = true;
                    break;
                }
                in_tree[e] = 0;
                in_tree[f] = 1;
            }
            if (improved) break;
        }
        if (!improved) break;
    }
    return score == 0;
}

}  // namespace

std::optional<ThreeDecomposition> solve_heuristic(const Graph& g, int restarts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int r = 0; r < restarts; ++r) {
        auto in_tree = greedy_tree(g, rng);
        if (!repair(g, in_tree, rng)) continue;
        std::vector<Edge> tree;
        for (int e = 0; e < g.m(); ++e)
            if (in_tree[e]) tree.push_back(g.edge(e));
        ThreeDecomposition d;
        if (decomposition_from_tree(g, tree, d)) return d;
    }
    return std::nullopt;
}

SolveResult solve_exhaustive(const Graph& g, std::uint64_t budget) {
    LabelProblem p;
    p.graph = &g;
    SolveResult r;
    auto st = label_search(p, budget, [&](const std::vector<Label>& ls) {
        r.decomposition.labels = ls;
        return false;
    });
    r.nodes = st.nodes;
    if (st.status == SearchStatus::Stopped) r.status = SolveStatus::Found;
    else if (st.status == SearchStatus::Budget) r.status = SolveStatus::Unknown;
    else r.status = SolveStatus::None;
    return r;
}

SolveResult solve(const Graph& g, const SolveOptions& opt) {
    if (!g.is_cubic()) throw std::invalid_argument("graph is not cubic");
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    if (opt.heuristic) {
        if (auto d = solve_heuristic(g, opt.restarts, opt.seed)) {
            SolveResult r;
            r.status = SolveStatus::Found;
            r.decomposition = *d;
            r.by_heuristic = true;
            return r;
        }
    }
    return solve_exhaustive(g, opt.budget);
}

void enumerate_decompositions(const Graph& g, const std::function<bool(const ThreeDecomposition&)>& visit) {
    LabelProblem p;
    p.graph = &g;
    ThreeDecomposition d;
    label_search(p, 0, [&](const std::vector<Label>& ls) {
        d.labels = ls;
        return visit(d);
    });
}

std::string tree_line(const std::vector<Edge>& tree) {
    auto sorted = tree;
    for (auto& [u, v] : sorted)
        if (u > v) std::swap(u, v);
    std::sort(sorted.begin(), sorted.end());
    std::string s;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) s.push_back(' ');
        s += edge_str(sorted[i]);
    }
    return s;
}

std::string write_certificate(const Graph& g, const ThreeDecomposition& d) {
    return write_graph6(g) + "\n" + tree_line(tree_edges(g, d)) + "\n";
}

std::vector<Edge> parse_tree_line(const std::string& line) {
    std::vector<Edge> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto dash = tok.find('-');
        bool ok = dash != std::string::npos && dash > 0 && dash + 1 < tok.size() && dash < 10 && tok.size() - dash < 11;
        for (size_t i = 0; ok && i < tok.size(); ++i)
            if (i != dash && !std::isdigit(static_cast<unsigned char>(tok[i]))) ok = false;
        if (!ok) throw std::invalid_argument("malformed tree edge '" + tok + "'");
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace cubic3dec
