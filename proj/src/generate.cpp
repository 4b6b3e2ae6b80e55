#include "cubic3dec/generate.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>

#include "cubic3dec/graph6.hpp"
#include "cubic3dec/named.hpp"
#include "cubic3dec/subgraph.hpp"

namespace cubic3dec {

namespace {

std::vector<Edge> without(const Graph& g, const Edge& e) {
    std::vector<Edge> es;
    for (const auto& f : g.edges())
        if (f != e) es.push_back(f);
    return es;
}

Graph insert_edge(const Graph& g, int e1, int e2) {
    int n = g.n();
    auto [a, b] = g.edge(e1);
    auto [c, d] = g.edge(e2);
    std::vector<Edge> es;
    for (int e = 0; e < g.m(); ++e)
        if (e != e1 && e != e2) es.push_back(g.edge(e));
    es.insert(es.end(), {{a, n}, {n, b}, {c, n + 1}, {n + 1, d}, {n, n + 1}});
    return Graph(n + 2, es);
}

Graph insert_diamond(const Graph& g, int e) {
    int n = g.n();
    auto [x, y] = g.edge(e);
    auto es = without(g, g.edge(e));
    es.insert(es.end(), {{x, n}, {n, n + 1}, {n, n + 2}, {n + 1, n + 2}, {n + 1, n + 3}, {n + 2, n + 3}, {n + 3, y}});
    return Graph(n + 4, es);
}

Graph attach_k4(const Graph& g, int e) {
    int n = g.n();
    auto [x, y] = g.edge(e);
    auto es = without(g, g.edge(e));
    int c = n, a = n + 1, p = n + 2, q = n + 3, r = n + 4, s = n + 5;
    es.insert(es.end(), {{x, c}, {c, y}, {c, a}, {a, p}, {a, q}, {p, r}, {p, s}, {q, r}, {q, s}, {r, s}});
    return Graph(n + 6, es);
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> cache;

}  // namespace

std::vector<Graph> connected_cubic_graphs(int n) {
    if (n < 4 || n % 2) return {};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::map<std::string, Graph> found;
    auto add = [&](const Graph& h) {
        auto key = canonical_form(h);
        if (!found.count(key)) found.emplace(key, parse_graph6(key));
    };
    if (n == 4) {
        add(named::k4());
    } else {
        for (const auto& g : connected_cubic_graphs(n - 2))
            for (int e1 = 0; e1 < g.m(); ++e1)
                for (int e2 = e1 + 1; e2 < g.m(); ++e2) add(insert_edge(g, e1, e2));
        for (const auto& g : connected_cubic_graphs(n - 4))
            for (int e = 0; e < g.m(); ++e) add(insert_diamond(g, e));
        for (const auto& g : connected_cubic_graphs(n - 6))
            for (int e = 0; e < g.m(); ++e) add(attach_k4(g, e));
    }
    std::vector<Graph> out;
    for (auto& [k, g] : found) out.push_back(g);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[n] = out;
    return out;
}

}  // namespace cubic3dec
