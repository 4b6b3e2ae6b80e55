#include "cubic3dec/reduce.hpp"

#include <algorithm>
#include <sstream>

#include "cubic3dec/graph6.hpp"
#include "cubic3dec/subgraph.hpp"

namespace cubic3dec {

namespace {

void recheck(const Graph& g, const std::string& pair) {
    // Graph construction already rejects loops and parallel edges
    if (!g.is_cubic() || !is_three_connected(g))
        throw std::logic_error("reduction by " + pair + " produced a graph that is not cubic and 3-connected");
}

std::optional<ConfigMatch> try_core(const Graph& g, const std::string& core, GateStats* stats) {
    const TemplateGraph& y = builtin_template(core);
    Graph pattern = y.core();
    std::optional<ConfigMatch> found;
    auto gate = [&](const TransformationPair& p, const Embedding& emb) {
        auto r = reduction_gate(g, p, emb);
        if (stats) stats->add(p.name, r.status);
        return r;
    };
    for_each_subgraph(g, pattern, false, [&](const std::vector<int>& phi) {
        auto emb = embedding_from_match(g, y, phi);
        if (core == "domino") {
            auto r = gate(find_pair("edge-domino"), emb);
            if (r.pass()) {
                found = ConfigMatch{&find_pair("edge-domino"), emb, std::move(*r.result), false};
                return false;
            }
            auto s = gate(find_pair("square-domino"), emb);
            if (s.pass()) {
                found = ConfigMatch{&find_pair("square-domino"), emb, std::move(*s.result), true};
                return false;
            }
            return true;
        }
        const TransformationPair* p = nullptr;
        for (const auto& q : builtin_pairs())
            if (q.y.name == core) p = &q;
        auto r = gate(*p, emb);
        if (!r.pass()) return true;
        found = ConfigMatch{p, emb, std::move(*r.result), false};
        return false;
    });
    return found;
}

const std::vector<std::string>& core_order() {
    static const std::vector<std::string> order = {"triangle", "k23", "domino", "twin-house", "claw-square", "petv"};
    return order;
}

struct Lifted {
    ThreeDecomposition d;
    int forest_index = -1;
    std::string rule;
};

// d is a decomposition of m.reduced.graph; carries it back to g.
Lifted lift_back(const Graph& g, const ConfigMatch& m, const ThreeDecomposition& d) {
    const auto& red = m.reduced;
    auto lr = lift_decomposition(red.graph, d, *m.pair, red.embedding);
    if (lr.rule == "domino-bad" && !m.edge_gate_failed)
        throw std::logic_error("domino square lift reached the bad class although the edge reduction was available");
    const auto& ext = lr.extended;
    // ext vertex -> g vertex
    std::vector<int> back(ext.graph.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (red.host_map[v] >= 0) back[ext.host_map[red.host_map[v]]] = v;
    for (int b = 0; b < m.pair->y.core_size; ++b) back[ext.core_map[b]] = m.emb_y.phi[b];
    std::vector<Edge> es;
    for (auto [a, b] : ext.graph.edges()) es.emplace_back(back[a], back[b]);
    std::vector<int> perm(back.size());
    for (size_t v = 0; v < back.size(); ++v) {
        if (back[v] < 0) throw std::logic_error("lift left a vertex unmapped");
        perm[v] = back[v];
    }
    if (!(relabel(ext.graph, perm) == g)) throw std::logic_error("lifted graph differs from the original");
    Lifted out;
    out.d.labels.assign(g.m(), Label::T);
    for (int e = 0; e < ext.graph.m(); ++e) {
        auto [a, b] = ext.graph.edge(e);
        out.d.labels[g.edge_id(perm[a], perm[b])] = lr.decomposition.labels[e];
    }
    auto v = verify(g, out.d);
    if (!v) throw std::logic_error("lift back fails: " + v.diagnostic);
    out.forest_index = lr.forest_index;
    out.rule = lr.rule;
    return out;
}

int forest_class(const TransformationPair& p, int index) { return compatibility(p).entries[index].orbit; }

}  // namespace

std::optional<ConfigMatch> find_configuration(const Graph& g, GateStats* stats) {
    for (const auto& core : core_order())
        if (auto m = try_core(g, core, stats)) return m;
    return std::nullopt;
}

PipelineResult solve_via_reduction(const Graph& g, const SolveOptions& opt, GateStats* stats,
                                   std::vector<Graph>* intermediates) {
    PipelineResult out;
    std::vector<Graph> chain{g};
    std::vector<ConfigMatch> steps;
    while (true) {
        if (static_cast<int>(steps.size()) > g.n()) throw std::logic_error("reduction chain longer than n");
        const Graph& cur = chain.back();
        auto m = find_configuration(cur, stats);
        if (!m) break;
        if (m->reduced.graph.n() >= cur.n()) throw std::logic_error("reduction did not shrink the graph");
        recheck(m->reduced.graph, m->pair->name);
        TraceStep st;
        st.pair = m->pair->name;
        st.phi = m->emb_y.phi;
        st.n_before = cur.n();
        st.edge_gate_failed = m->edge_gate_failed;
        out.trace.push_back(st);
        chain.push_back(m->reduced.graph);
        steps.push_back(std::move(*m));
    }
    if (intermediates) *intermediates = chain;
    out.base = chain.back();
    auto base = solve(out.base, opt);
    out.nodes = base.nodes;
    out.status = base.status;
    if (base.status != SolveStatus::Found) return out;
    out.base_decomposition = base.decomposition;

    ThreeDecomposition d = base.decomposition;
    for (size_t i = steps.size(); i-- > 0;) {
        auto l = lift_back(chain[i], steps[i], d);
        d = std::move(l.d);
        out.trace[i].forest_class = forest_class(*steps[i].pair, l.forest_index);
        out.trace[i].rule = l.rule;
    }
    out.decomposition = std::move(d);
    return out;
}

ThreeDecomposition replay_trace(const Graph& g, const std::vector<TraceStep>& trace,
                                const ThreeDecomposition& base_decomposition) {
    std::vector<Graph> chain{g};
    std::vector<ConfigMatch> steps;
    for (const auto& st : trace) {
        const auto& p = find_pair(st.pair);
        const Graph cur = chain.back();
        if (static_cast<int>(st.phi.size()) != p.y.core_size) throw std::invalid_argument("trace step has wrong size");
        for (int h : st.phi)
            if (h < 0 || h >= cur.n()) throw std::invalid_argument("trace vertex out of range");
        auto emb = embedding_from_match(cur, p.y, st.phi);
        auto r = reduction_gate(cur, p, emb);
        if (!r.pass()) throw std::invalid_argument("trace step " + st.pair + " fails the gate: " + r.detail);
        chain.push_back(r.result->graph);
        steps.push_back(ConfigMatch{&p, emb, std::move(*r.result), st.edge_gate_failed});
    }
    auto v = verify(chain.back(), base_decomposition);
    if (!v) throw std::invalid_argument("base decomposition fails: " + v.diagnostic);
    ThreeDecomposition d = base_decomposition;
    for (size_t i = steps.size(); i-- > 0;) {
        auto l = lift_back(chain[i], steps[i], d);
        if (!trace[i].rule.empty() && l.rule != trace[i].rule)
            throw std::logic_error("replayed lift rule differs at step " + std::to_string(i + 1));
        d = std::move(l.d);
    }
    return d;
}

std::string format_trace(const PipelineResult& r) {
    std::ostringstream out;
    out << "steps " << r.trace.size() << "\n";
    for (const auto& st : r.trace) {
        out << "step " << st.pair << " n=" << st.n_before << " phi=";
        for (size_t i = 0; i < st.phi.size(); ++i) out << (i ? "," : "") << st.phi[i];
        out << " class=" << st.forest_class << " rule=" << (st.rule.empty() ? "-" : st.rule);
        if (st.edge_gate_failed) out << " edge-gate=failed";
        out << "\n";
    }
    out << "base " << r.base.n() << "\n";
    if (r.status == SolveStatus::Found)
        out << write_certificate(r.base, r.base_decomposition);
    else
        out << "unknown\n";
    return out.str();
}

CounterexampleReport check_min_counterexample_properties(const Graph& g) {
    CounterexampleReport rep;
    int gi = girth(g);
    rep.girth_ok = gi == 0 || gi >= 4;

    // cycles of length 4..6, each found from its smallest vertex
    rep.short_cycles_induced = true;
    std::vector<int> path;
    std::vector<char> on(g.n(), 0);
    auto chordless = [&]() {
        for (size_t i = 0; i < path.size(); ++i)
            for (size_t j = i + 2; j < path.size(); ++j) {
                if (i == 0 && j + 1 == path.size()) continue;
                if (g.adjacent(path[i], path[j])) return false;
            }
        return true;
    };
    auto dfs = [&](auto&& self, int v) -> void {
        if (!rep.short_cycles_induced) return;
        for (int w : g.neighbors(v)) {
            if (w == path[0] && path.size() >= 4 && path[1] < path.back()) {
                if (!chordless()) rep.short_cycles_induced = false;
                continue;
            }
            if (on[w] || w < path[0] || path.size() == 6) continue;
            on[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (int s = 0; s < g.n() && rep.short_cycles_induced; ++s) {
        path = {s};
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }

    rep.p6_centres = true;
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int b : g.neighbors(u)) {
            if (b == v || ok) continue;
            for (int a : g.neighbors(b)) {
                if (a == u || a == v || ok) continue;
                for (int c : g.neighbors(v)) {
                    if (c == u || c == a || c == b || ok) continue;
                    for (int dd : g.neighbors(c)) {
                        if (dd == v || dd == u || dd == a || dd == b) continue;
                        int p[6] = {a, b, u, v, c, dd};
                        bool induced = true;
                        for (int i = 0; i < 6 && induced; ++i)
                            for (int j = i + 2; j < 6; ++j)
                                if (g.adjacent(p[i], p[j])) induced = false;
                        if (induced) {
                            ok = true;
                            break;
                        }
                    }
                }
            }
        }
        if (!ok) {
            rep.p6_centres = false;
            break;
        }
    }

    for (const auto& core : core_order())
        if (find_subgraph(g, builtin_template(core).core(), false)) rep.configurations.push_back(core);
    return rep;
}

}  // namespace cubic3dec
