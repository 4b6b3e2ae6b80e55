#include "cubic3dec/subgraph.hpp"

#include <algorithm>
#include <map>

#include "cubic3dec/graph6.hpp"

namespace cubic3dec {

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pat;
    bool induced;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> order, anchor;
    std::vector<std::vector<int>> back_adj, back_non;
    std::vector<int> map;
    std::vector<char> used;
    bool stop = false;

    Matcher(const Graph& h, const Graph& p, bool ind, const std::function<bool(const std::vector<int>&)>& v)
        : host(h), pat(p), induced(ind), visit(v) {
        int k = p.n();
        std::vector<char> placed(k, 0);
        std::vector<int> links(k, 0);
        for (int step = 0; step < k; ++step) {
            int best = -1;
            for (int q = 0; q < k; ++q) {
                if (placed[q]) continue;
                if (best < 0 || links[q] > links[best] ||
                    (links[q] == links[best] && p.degree(q) > p.degree(best)))
                    best = q;
            }
            placed[best] = 1;
            order.push_back(best);
            for (int w : p.neighbors(best)) ++links[w];
        }
        std::vector<int> pos(k);
        for (int i = 0; i < k; ++i) pos[order[i]] = i;
        anchor.assign(k, -1);
        back_adj.resize(k);
        back_non.resize(k);
        for (int i = 0; i < k; ++i) {
            int q = order[i];
            for (int j = 0; j < i; ++j) {
                int r = order[j];
                if (p.adjacent(q, r)) {
                    back_adj[i].push_back(r);
                    if (anchor[i] < 0) anchor[i] = r;
                } else {
                    back_non[i].push_back(r);
                }
            }
        }
        map.assign(k, -1);
        used.assign(h.n(), 0);
    }

    bool fits(int i, int h) const {
        int q = order[i];
        if (used[h] || host.degree(h) < pat.degree(q)) return false;
        for (int r : back_adj[i])
            if (!host.adjacent(h, map[r])) return false;
        if (induced)
            for (int r : back_non[i])
                if (host.adjacent(h, map[r])) return false;
        return true;
    }

    void run(int i) {
        if (stop) return;
        if (i == pat.n()) {
            if (!visit(map)) stop = true;
            return;
        }
        int q = order[i];
        auto go = [&](int h) {
            if (!fits(i, h)) return;
            map[q] = h;
            used[h] = 1;
            run(i + 1);
            used[h] = 0;
            map[q] = -1;
        };
        if (anchor[i] >= 0) {
            for (int h : host.neighbors(map[anchor[i]])) {
                go(h);
                if (stop) return;
            }
        } else {
            for (int h = 0; h < host.n(); ++h) {
                go(h);
                if (stop) return;
            }
        }
    }
};

}  // namespace

void for_each_subgraph(const Graph& host, const Graph& pattern, bool induced,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    if (pattern.n() > host.n()) return;
    if (pattern.n() == 0) {
        visit({});
        return;
    }
    Matcher m(host, pattern, induced, visit);
    m.run(0);
}

std::optional<SubgraphMatch> find_subgraph(const Graph& host, const Graph& pattern, bool require_induced) {
    std::optional<SubgraphMatch> out;
    for_each_subgraph(host, pattern, require_induced, [&](const std::vector<int>& m) {
        out = SubgraphMatch{m, require_induced};
        return false;
    });
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    std::vector<int> da(a.n()), db(b.n());
    for (int v = 0; v < a.n(); ++v) da[v] = a.degree(v);
    for (int v = 0; v < b.n(); ++v) db[v] = b.degree(v);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    auto m = find_subgraph(b, a, true);
    if (!m) return std::nullopt;
    return m->vertex_map;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<std::vector<int>> out;
    for_each_subgraph(g, g, true, [&](const std::vector<int>& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

namespace {

void refine(const Graph& g, std::vector<int>& col) {
    int n = g.n();
    int classes = *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<int>> sig(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(col[v]);
            for (int w : g.neighbors(v)) s.push_back(col[w]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> idx(n);
        for (int v = 0; v < n; ++v) idx[v] = v;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
            next[idx[i]] = c;
        }
        col = std::move(next);
        if (c + 1 == classes) return;
        classes = c + 1;
    }
}

struct Canon {
    const Graph& g;
    std::vector<std::uint64_t> best_key;
    std::vector<int> best_perm;

    std::vector<std::uint64_t> key(const std::vector<int>& pos) const {
        int n = g.n();
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[pos[v]] = v;
        std::vector<std::uint64_t> k((static_cast<size_t>(n) * n + 63) / 64 + 1, 0);
        size_t bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.adjacent(inv[i], inv[j])) k[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        return k;
    }

    void search(std::vector<int> col) {
        refine(g, col);
        int n = g.n();
        std::vector<int> size(n, 0);
        for (int c : col) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
        if (target < 0) {
            auto k = key(col);
            if (best_perm.empty() || k > best_key) {
                best_key = std::move(k);
                best_perm = col;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (col[v] != target) continue;
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * col[u] + (u == v ? 0 : 1);
            search(std::move(next));
        }
    }
};

}  // namespace

std::vector<int> canonical_labelling(const Graph& g) {
    if (g.n() == 0) return {};
    Canon c{g, {}, {}};
    std::vector<int> col(g.n());
    for (int v = 0; v < g.n(); ++v) col[v] = g.degree(v);
    c.search(col);
    return c.best_perm;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labelling(g)); }

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

}  // namespace cubic3dec
