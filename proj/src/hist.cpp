#include "cubic3dec/hist.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubic3dec {

ColouredGraph ColouredGraph::from(const Graph& g, const ThreeDecomposition& d) {
    ColouredGraph cg{g, std::vector<char>(g.m(), 0)};
    for (int e = 0; e < g.m(); ++e) cg.green[e] = d.labels[e] == Label::T;
    return cg;
}

std::vector<Edge> ColouredGraph::tree() const {
    std::vector<Edge> out;
    for (int e = 0; e < graph.m(); ++e)
        if (green[e]) out.push_back(graph.edge(e));
    return out;
}

ThreeDecomposition ColouredGraph::decomposition() const {
    ThreeDecomposition d;
    auto r = decomposition_from_tree(graph, tree(), d);
    if (!r) throw std::logic_error("coloured graph is not a 3-decomposition: " + r.diagnostic);
    return d;
}

namespace {

ColouredGraph build(int n, const std::vector<Edge>& edges, const std::vector<Edge>& green_edges) {
    Graph g(n, edges);
    ColouredGraph cg{g, std::vector<char>(g.m(), 0)};
    for (auto [u, v] : green_edges) {
        int e = g.edge_id(u, v);
        if (e < 0) throw std::logic_error("green edge missing");
        cg.green[e] = 1;
    }
    return cg;
}

}  // namespace

ColouredGraph apply_reduction(const ColouredGraph& cg, const ReductionStep& step) {
    const Graph& g = cg.graph;
    std::vector<int> pos(g.n(), 0);
    for (int v : step.removed_vertices) pos[v] = -1;
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
        if (pos[v] == 0) pos[v] = k++;
    std::vector<Edge> es, green;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (pos[u] < 0 || pos[v] < 0) continue;
        es.emplace_back(pos[u], pos[v]);
        if (cg.green[e]) green.push_back(es.back());
    }
    for (auto [u, v] : step.restored_edges) {
        es.emplace_back(pos[u], pos[v]);
        green.push_back(es.back());
    }
    return build(k, es, green);
}

ExtensionSpec inverse(const ReductionStep& step) {
    std::vector<int> pos(step.n_before, 0);
    for (int v : step.removed_vertices) pos[v] = -1;
    int k = 0;
    for (int v = 0; v < step.n_before; ++v)
        if (pos[v] == 0) pos[v] = k++;
    ExtensionSpec s;
    s.kind = step.kind;
    for (auto [u, v] : step.restored_edges) s.targets.emplace_back(pos[u], pos[v]);
    s.new_ids = step.removed_vertices;
    return s;
}

ColouredGraph tutte_or_diamond_extend(const ColouredGraph& cg, const ExtensionSpec& spec) {
    const Graph& g = cg.graph;
    size_t want_targets = spec.kind == StepKind::TutteReduction ? 2 : 1;
    size_t want_new = spec.kind == StepKind::TutteReduction ? 2 : 4;
    if (spec.targets.size() != want_targets || spec.new_ids.size() != want_new)
        throw std::invalid_argument("malformed extension");
    std::vector<int> tid;
    for (auto [u, v] : spec.targets) {
        int e = g.edge_id(u, v);
        if (e < 0) throw std::invalid_argument("target " + edge_str({u, v}) + " is not an edge");
        if (!cg.green[e]) throw std::invalid_argument("target " + edge_str({u, v}) + " is not green");
        tid.push_back(e);
    }
    if (tid.size() == 2 && tid[0] == tid[1]) throw std::invalid_argument("Tutte-extension needs two distinct edges");
    int n = g.n() + static_cast<int>(want_new);
    std::vector<int> map(n, 0);
    for (int v : spec.new_ids) {
        if (v < 0 || v >= n || map[v] == -1) throw std::invalid_argument("bad new vertex ids");
        map[v] = -1;
    }
    std::vector<int> old_to_new(g.n());
    for (int v = 0, k = 0; v < n; ++v)
        if (map[v] == 0) old_to_new[k++] = v;
    std::vector<Edge> es, green;
    for (int e = 0; e < g.m(); ++e) {
        if (std::find(tid.begin(), tid.end(), e) != tid.end()) continue;
        es.emplace_back(old_to_new[g.edge(e).first], old_to_new[g.edge(e).second]);
        if (cg.green[e]) green.push_back(es.back());
    }
    auto link = [&](int a, int b, bool gr) {
        es.emplace_back(a, b);
        if (gr) green.push_back(es.back());
    };
    const auto& id = spec.new_ids;
    if (spec.kind == StepKind::TutteReduction) {
        for (int i = 0; i < 2; ++i) {
            auto [p, q] = spec.targets[i];
            link(old_to_new[p], id[i], true);
            link(id[i], old_to_new[q], true);
        }
        link(id[0], id[1], false);
    } else {
        auto [x, y] = spec.targets[0];
        link(old_to_new[x], id[0], true);
        link(id[0], id[2], true);
        link(id[2], id[1], true);
        link(id[1], id[3], true);
        link(id[3], old_to_new[y], true);
        link(id[0], id[1], false);
        link(id[2], id[3], false);
    }
    try {
        return build(n, es, green);
    } catch (const GraphError& e) {
        throw std::invalid_argument(std::string("extension would not be simple: ") + e.what());
    }
}

ColouredGraph tutte_extend(const ColouredGraph& cg, const Edge& e1, const Edge& e2) {
    int n = cg.graph.n();
    return tutte_or_diamond_extend(cg, {StepKind::TutteReduction, {e1, e2}, {n, n + 1}});
}

ColouredGraph diamond_extend(const ColouredGraph& cg, const Edge& e) {
    int n = cg.graph.n();
    return tutte_or_diamond_extend(cg, {StepKind::DiamondReduction, {e}, {n, n + 1, n + 2, n + 3}});
}

namespace {

struct View {
    const ColouredGraph& cg;
    bool green(int u, int v) const {
        int e = cg.graph.edge_id(u, v);
        return e >= 0 && cg.green[e];
    }
    bool adj(int u, int v) const { return cg.graph.adjacent(u, v); }
    std::vector<int> others(int v, std::initializer_list<int> skip) const {
        std::vector<int> out;
        for (int w : cg.graph.neighbors(v))
            if (std::find(skip.begin(), skip.end(), w) == skip.end()) out.push_back(w);
        return out;
    }
    int other(int v, std::initializer_list<int> skip) const {
        auto o = others(v, skip);
        if (o.size() != 1) throw std::logic_error("hist_reduce: neighbourhood mismatch at vertex " + std::to_string(v));
        return o[0];
    }
};

[[noreturn]] void broken(const std::string& what) { throw std::logic_error("hist_reduce: " + what); }

ReductionStep next_step(const ColouredGraph& cg) {
    const Graph& g = cg.graph;
    View s{cg};
    int v = -1;
    for (int x = 0; x < g.n() && v < 0; ++x) {
        int d = 0;
        for (int e : g.incident(x)) d += cg.green[e];
        if (d == 2) v = x;
    }
    ReductionStep st;
    st.n_before = g.n();
    if (v < 0) return st;
    int u = -1;
    for (int w : g.neighbors(v))
        if (!s.green(v, w)) u = w;
    auto nu = s.others(u, {v}), nv = s.others(v, {u});
    if (!s.green(u, nu[0]) || !s.green(u, nu[1]) || !s.green(v, nv[0]) || !s.green(v, nv[1]))
        broken("edge " + edge_str({std::min(u, v), std::max(u, v)}) + " is not an M-edge");
    if (!s.adj(nu[0], nu[1]) && !s.adj(nv[0], nv[1])) {
        st.kind = StepKind::TutteReduction;
        st.proof_case = 'a';
        st.removed_vertices = {u, v};
        st.restored_edges = {{nu[0], nu[1]}, {nv[0], nv[1]}};
        return st;
    }
    if (!s.adj(nu[0], nu[1])) {
        std::swap(u, v);
        std::swap(nu, nv);
    }
    int xu = nu[0], yu = nu[1];
    if (s.green(xu, yu)) broken("triangle edge is green");
    int txu = s.other(xu, {u, yu}), tyu = s.other(yu, {u, xu});
    if (!s.green(xu, txu) || !s.green(yu, tyu)) broken("triangle exits are not green");
    if (txu != v && tyu != v) {
        st.kind = StepKind::TutteReduction;
        st.proof_case = 'b';
        st.removed_vertices = {xu, yu};
        st.restored_edges = {{txu, u}, {u, tyu}};
        return st;
    }
    if (tyu == v) {
        std::swap(xu, yu);
        std::swap(txu, tyu);
    }
    // now xu is adjacent to v
    int yv = s.other(v, {u, xu});
    if (yv == tyu) broken("tree cycle through the diamond");
    if (!s.adj(yv, tyu)) {
        st.kind = StepKind::DiamondReduction;
        st.proof_case = 'c';
        st.removed_vertices = {yu, xu, u, v};
        st.restored_edges = {{tyu, yv}};
        return st;
    }
    if (s.green(yv, tyu)) broken("closing edge is green");
    int yv2 = s.other(yv, {v, tyu}), yu2 = s.other(tyu, {yu, yv});
    st.kind = StepKind::TutteReduction;
    st.proof_case = 'd';
    st.removed_vertices = {yv, tyu};
    st.restored_edges = {{v, yv2}, {yu, yu2}};
    return st;
}

}  // namespace

HistResult hist_reduce(const Graph& g, const ThreeDecomposition& d) {
    auto ok = verify(g, d);
    if (!ok) throw std::invalid_argument("hist_reduce needs a valid decomposition: " + ok.diagnostic);
    HistResult r{ColouredGraph::from(g, d), {}};
    while (true) {
        auto st = next_step(r.terminal);
        if (st.removed_vertices.empty()) break;
        r.terminal = apply_reduction(r.terminal, st);
        r.steps.push_back(std::move(st));
    }
    auto td = r.terminal.decomposition();
    for (auto l : td.labels)
        if (l == Label::M) broken("HIST terminal still has an M-edge");
    return r;
}

ColouredGraph replay(const HistResult& r) {
    ColouredGraph cg = r.terminal;
    for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) cg = tutte_or_diamond_extend(cg, inverse(*it));
    return cg;
}

std::string step_str(const ReductionStep& s) {
    std::string out = s.kind == StepKind::TutteReduction ? "tutte" : "diamond";
    out += std::string(" case=") + s.proof_case + " n=" + std::to_string(s.n_before) + " remove";
    for (int v : s.removed_vertices) out += " " + std::to_string(v);
    out += " restore";
    for (auto& e : s.restored_edges) out += " " + edge_str(e);
    return out;
}

}  // namespace cubic3dec
