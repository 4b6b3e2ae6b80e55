#include "cubic3dec/templates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cubic3dec/subgraph.hpp"

namespace cubic3dec {

Graph TemplateGraph::core() const {
    std::vector<int> vs(core_size);
    for (int v = 0; v < core_size; ++v) vs[v] = v;
    return induced_subgraph(graph, vs);
}

std::vector<char> TemplateGraph::outer_mask() const {
    std::vector<char> m(graph.n(), 0);
    for (int v = core_size; v < graph.n(); ++v) m[v] = 1;
    return m;
}

std::string TemplateGraph::vertex_name(int v) const {
    if (v < static_cast<int>(names.size())) return names[v];
    if (is_outer(v)) return "v" + std::to_string(v - core_size + 1);
    return "u" + std::to_string(v + 1);
}

std::string TemplateGraph::edge_name(int e) const {
    auto [a, b] = graph.edge(e);
    return vertex_name(a) + vertex_name(b);
}

void validate(const TemplateGraph& t) {
    for (int v = 0; v < t.graph.n(); ++v) {
        int want = t.is_outer(v) ? 1 : 3;
        if (t.graph.degree(v) != want)
            throw std::invalid_argument(t.name + ": vertex " + t.vertex_name(v) + " has degree " +
                                        std::to_string(t.graph.degree(v)));
        if (t.is_outer(v) && t.is_outer(t.graph.neighbors(v)[0]))
            throw std::invalid_argument(t.name + ": outer vertices " + t.vertex_name(v) + " adjacent to an outer vertex");
    }
}

TemplateGraph template_from_core(std::string name, const Graph& core, const std::vector<int>& attach,
                                 std::vector<std::string> core_names) {
    int c = core.n();
    std::vector<Edge> es = core.edges();
    for (size_t i = 0; i < attach.size(); ++i) es.emplace_back(attach[i], c + static_cast<int>(i));
    TemplateGraph t;
    t.name = std::move(name);
    t.graph = Graph(c + static_cast<int>(attach.size()), es);
    t.core_size = c;
    if (!core_names.empty()) {
        t.names = std::move(core_names);
        for (size_t i = 0; i < attach.size(); ++i) t.names.push_back("v" + std::to_string(i + 1));
    }
    validate(t);
    return t;
}

TemplateGraph make_template(const Graph& core, std::string name) {
    if (!core.is_subcubic()) throw std::invalid_argument("core is not subcubic");
    std::vector<int> attach;
    for (int v = 0; v < core.n(); ++v)
        for (int k = core.degree(v); k < 3; ++k) attach.push_back(v);
    return template_from_core(std::move(name), core, attach);
}

std::string check_embedding(const Graph& host, const TemplateGraph& t, const Embedding& emb, bool require_induced) {
    int c = t.core_size;
    if (static_cast<int>(emb.phi.size()) != c || static_cast<int>(emb.psi.size()) != t.outer_count())
        return "embedding has wrong size";
    std::vector<char> img(host.n(), 0);
    for (int a = 0; a < c; ++a) {
        int h = emb.phi[a];
        if (h < 0 || h >= host.n()) return "phi out of range";
        if (img[h]) return "phi is not injective";
        img[h] = 1;
    }
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            bool te = t.graph.adjacent(a, b), he = host.adjacent(emb.phi[a], emb.phi[b]);
            if (te && !he) return "core edge " + t.vertex_name(a) + t.vertex_name(b) + " missing in host";
            if (require_induced && !te && he) return "copy is not induced";
        }
    for (int a = 0; a < c; ++a) {
        std::vector<int> outside, want;
        for (int h : host.neighbors(emb.phi[a]))
            if (!img[h]) outside.push_back(h);
        for (int w : t.graph.neighbors(a))
            if (t.is_outer(w)) want.push_back(emb.psi[w - c]);
        std::sort(want.begin(), want.end());
        if (outside != want) return "attachments of " + t.vertex_name(a) + " do not match the host";
    }
    return "";
}

Embedding embedding_from_match(const Graph& host, const TemplateGraph& t, const std::vector<int>& phi) {
    Embedding emb{phi, std::vector<int>(t.outer_count(), -1)};
    std::vector<char> img(host.n(), 0);
    for (int h : phi) img[h] = 1;
    for (int a = 0; a < t.core_size; ++a) {
        std::vector<int> outside, labels;
        for (int h : host.neighbors(phi[a]))
            if (!img[h]) outside.push_back(h);
        for (int w : t.graph.neighbors(a))
            if (t.is_outer(w)) labels.push_back(w - t.core_size);
        if (outside.size() != labels.size()) continue;
        for (size_t i = 0; i < labels.size(); ++i) emb.psi[labels[i]] = outside[i];
    }
    return emb;
}

void for_each_embedding(const Graph& host, const TemplateGraph& t,
                        const std::function<bool(const Embedding&)>& visit) {
    Graph core = t.core();
    for_each_subgraph(host, core, true, [&](const std::vector<int>& phi) {
        auto emb = embedding_from_match(host, t, phi);
        if (!check_embedding(host, t, emb, true).empty()) return true;
        return visit(emb);
    });
}

std::vector<Embedding> embeddings(const Graph& host, const TemplateGraph& t) {
    std::vector<Embedding> out;
    for_each_embedding(host, t, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

TransformResult apply_transformation(const Graph& host, const TemplateGraph& from, const TemplateGraph& to,
                                     const Embedding& emb) {
    auto err = check_embedding(host, from, emb, false);
    if (!err.empty()) throw std::invalid_argument("invalid embedding: " + err);
    if (from.outer_count() != to.outer_count()) throw std::invalid_argument("templates have different outer sets");
    TransformResult r;
    r.host_map.assign(host.n(), 0);
    for (int h : emb.phi) r.host_map[h] = -1;
    int k = 0;
    for (int v = 0; v < host.n(); ++v)
        if (r.host_map[v] == 0) r.host_map[v] = k++;
    std::vector<Edge> es;
    for (auto [u, v] : host.edges())
        if (r.host_map[u] >= 0 && r.host_map[v] >= 0) es.emplace_back(r.host_map[u], r.host_map[v]);
    int c = to.core_size;
    r.core_map.resize(c);
    for (int b = 0; b < c; ++b) r.core_map[b] = k + b;
    Graph to_core = to.core();
    for (auto [a, b] : to_core.edges()) es.emplace_back(k + a, k + b);
    std::set<Edge> seen;
    r.embedding.phi = r.core_map;
    r.embedding.psi.resize(to.outer_count());
    for (int w = 0; w < to.outer_count(); ++w) {
        int b = to.attachment(w);
        int h = r.host_map[emb.psi[w]];
        r.embedding.psi[w] = h;
        if (!seen.insert({b, h}).second) throw NonSimpleResult(b, emb.psi[w]);
        es.emplace_back(k + b, h);
    }
    r.graph = Graph(k + c, es);
    return r;
}

TransformResult extend(const Graph& host, const TransformationPair& pair, const Embedding& emb_x) {
    return apply_transformation(host, pair.x, pair.y, emb_x);
}

TransformResult reduce(const Graph& host, const TransformationPair& pair, const Embedding& emb_y) {
    return apply_transformation(host, pair.y, pair.x, emb_y);
}

const char* gate_name(GateStatus s) {
    switch (s) {
        case GateStatus::Pass: return "pass";
        case GateStatus::NotInduced: return "not-induced";
        case GateStatus::NonSimple: return "non-simple";
        case GateStatus::NotThreeConnected: return "not-3-connected";
    }
    return "?";
}

GateResult reduction_gate(const Graph& host, const TransformationPair& pair, const Embedding& emb_y) {
    GateResult g;
    auto err = check_embedding(host, pair.y, emb_y, true);
    if (!err.empty()) {
        g.status = GateStatus::NotInduced;
        g.detail = err;
        return g;
    }
    try {
        g.result = reduce(host, pair, emb_y);
    } catch (const NonSimpleResult& e) {
        g.status = GateStatus::NonSimple;
        g.detail = e.what();
        return g;
    }
    if (!is_three_connected(g.result->graph)) {
        g.status = GateStatus::NotThreeConnected;
        g.detail = "reduced graph has a vertex cut of size <= 2";
    }
    return g;
}

namespace {

TemplateGraph T(std::string name, int c, std::vector<Edge> es, std::vector<int> attach, std::vector<std::string> names) {
    return template_from_core(std::move(name), Graph(c, std::move(es)), attach, std::move(names));
}

std::vector<TemplateGraph> make_templates() {
    std::vector<TemplateGraph> ts;
    ts.push_back(T("node", 1, {}, {0, 0, 0}, {"u"}));
    ts.push_back(T("triangle", 3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}, {"u1", "u2", "u3"}));
    ts.push_back(T("k23", 5, {{3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}}, {0, 1, 2}, {"c1", "c2", "c3", "a", "b"}));
    // Petersen graph minus one vertex; its three degree-2 vertices carry v1..v3
    ts.push_back(T("petv", 9,
                   {{0, 1}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 8}, {4, 6}, {5, 7}, {6, 8}, {7, 4}, {8, 5}},
                   {0, 3, 4}, {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9"}));
    // square u1 u2 / u3 u4, cycle u1u2u4u3
    ts.push_back(T("square", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 1, 2, 3}, {"u1", "u2", "u3", "u4"}));
    // horizontal edge: v1, v3 on the left end, v2, v4 on the right end
    ts.push_back(T("edge", 2, {{0, 1}}, {0, 1, 0, 1}, {"u1", "u2"}));
    ts.push_back(T("domino", 6, {{0, 1}, {0, 4}, {4, 2}, {1, 5}, {5, 3}, {4, 5}, {2, 3}}, {0, 1, 2, 3},
                   {"u1", "u2", "u3", "u4", "u5", "u6"}));
    ts.push_back(T("twin-house", 6, {{0, 1}, {0, 4}, {1, 5}, {4, 2}, {5, 3}, {4, 3}, {5, 2}}, {0, 1, 2, 3},
                   {"u1", "u2", "u3", "u4", "u5", "u6"}));
    // square a b c d with a claw z whose leaves x1, x2, x3 sit at a, c, d; b carries v1
    ts.push_back(T("claw-square", 8,
                   {{4, 0}, {0, 5}, {5, 6}, {6, 4}, {7, 1}, {7, 2}, {7, 3}, {1, 4}, {2, 5}, {3, 6}},
                   {0, 1, 2, 3}, {"b", "x1", "x2", "x3", "a", "c", "d", "z"}));
    return ts;
}

const std::vector<TemplateGraph>& templates() {
    static const std::vector<TemplateGraph> ts = make_templates();
    return ts;
}

}  // namespace

const TemplateGraph& builtin_template(const std::string& name) {
    for (const auto& t : templates())
        if (t.name == name) return t;
    throw std::invalid_argument("unknown template '" + name + "'");
}

const std::vector<TransformationPair>& builtin_pairs() {
    static const std::vector<TransformationPair> ps = [] {
        std::vector<TransformationPair> out;
        auto add = [&](const char* x, const char* y) {
            out.push_back({std::string(x) + "-" + y, builtin_template(x), builtin_template(y)});
        };
        add("node", "triangle");
        add("node", "k23");
        add("node", "petv");
        add("square", "claw-square");
        add("square", "twin-house");
        add("edge", "domino");
        add("square", "domino");
        add("edge", "square");
        return out;
    }();
    return ps;
}

const TransformationPair& find_pair(const std::string& name) {
    for (const auto& p : builtin_pairs())
        if (p.name == name || p.y.name + "-" + p.x.name == name) return p;
    throw std::invalid_argument("unknown pair '" + name + "'");
}

std::vector<std::vector<int>> template_automorphisms(const TemplateGraph& t) { return automorphisms(t.graph); }

std::vector<PairSymmetry> pair_symmetries(const TransformationPair& pair) {
    auto ax = template_automorphisms(pair.x);
    auto ay = template_automorphisms(pair.y);
    auto outer_action = [](const TemplateGraph& t, const std::vector<int>& s) {
        std::vector<int> a;
        for (int w = 0; w < t.outer_count(); ++w) a.push_back(s[t.outer_vertex(w)] - t.core_size);
        return a;
    };
    std::map<std::vector<int>, std::vector<int>> ys;
    for (const auto& s : ay) ys.emplace(outer_action(pair.y, s), s);
    std::vector<PairSymmetry> out;
    for (const auto& s : ax) {
        auto it = ys.find(outer_action(pair.x, s));
        if (it != ys.end()) out.push_back({s, it->second});
    }
    return out;
}

std::string serialize_template(const TemplateGraph& t) {
    std::ostringstream out;
    out << "template " << t.name << "\n";
    out << "inner";
    for (int v = 0; v < t.core_size; ++v) out << " " << t.vertex_name(v);
    out << "\nedges";
    Graph core = t.core();
    for (auto [a, b] : core.edges()) out << " " << t.vertex_name(a) << "-" << t.vertex_name(b);
    out << "\nouter";
    for (int w = 0; w < t.outer_count(); ++w) out << " " << t.vertex_name(t.outer_vertex(w)) << "@" << t.vertex_name(t.attachment(w));
    out << "\nend\n";
    return out.str();
}

std::string serialize_pair(const TransformationPair& p) {
    return "pair " + p.name + "\n" + serialize_template(p.x) + serialize_template(p.y);
}

namespace {

TemplateGraph parse_template(std::istream& in) {
    std::string line, word, name;
    std::vector<std::string> inner;
    std::vector<Edge> edges;
    std::vector<std::pair<std::string, std::string>> outer;
    std::map<std::string, int> id;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (!(ls >> word)) continue;
        if (word == "template") {
            ls >> name;
        } else if (word == "inner") {
            while (ls >> word) {
                id[word] = static_cast<int>(inner.size());
                inner.push_back(word);
            }
        } else if (word == "edges") {
            while (ls >> word) {
                auto dash = word.find('-');
                if (dash == std::string::npos || !id.count(word.substr(0, dash)) || !id.count(word.substr(dash + 1)))
                    throw std::invalid_argument("bad template edge '" + word + "'");
                edges.emplace_back(id[word.substr(0, dash)], id[word.substr(dash + 1)]);
            }
        } else if (word == "outer") {
            while (ls >> word) {
                auto at = word.find('@');
                if (at == std::string::npos || !id.count(word.substr(at + 1)))
                    throw std::invalid_argument("bad outer entry '" + word + "'");
                outer.emplace_back(word.substr(0, at), word.substr(at + 1));
            }
        } else if (word == "end") {
            std::vector<int> attach;
            for (size_t i = 0; i < outer.size(); ++i) {
                if (outer[i].first != "v" + std::to_string(i + 1))
                    throw std::invalid_argument("outer labels must be v1, v2, ... in order");
                attach.push_back(id[outer[i].second]);
            }
            return template_from_core(name, Graph(static_cast<int>(inner.size()), edges), attach, inner);
        } else {
            throw std::invalid_argument("unexpected line '" + line + "'");
        }
    }
    throw std::invalid_argument("template without end");
}

}  // namespace

TransformationPair parse_pair(const std::string& text) {
    std::istringstream in(text);
    std::string line, word;
    TransformationPair p;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> word) {
            if (word != "pair") throw std::invalid_argument("expected 'pair'");
            ls >> p.name;
            break;
        }
    }
    p.x = parse_template(in);
    p.y = parse_template(in);
    if (p.x.outer_count() != p.y.outer_count()) throw std::invalid_argument("pair has different outer sets");
    return p;
}

}  // namespace cubic3dec
