#include "cubic3dec/extend.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace cubic3dec {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

using TemplatePtr = std::shared_ptr<const TemplateGraph>;

std::optional<ConsistentForest> forest_from_tree_ptr(const TemplatePtr& tp, const std::vector<char>& tree) {
    const TemplateGraph& t = *tp;
    const Graph& g = t.graph;
    int n = g.n();
    Dsu tr(n), co(n);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        if (tree[e]) {
            if (!tr.unite(a, b)) return std::nullopt;
        } else {
            co.unite(a, b);
        }
    }
    std::vector<char> has_outer(n, 0);
    for (int v = t.core_size; v < n; ++v) has_outer[tr.find(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!has_outer[tr.find(v)]) return std::nullopt;

    std::vector<int> cdeg(n, 0), verts(n, 0), edges(n, 0), ends(n, 0), outer_ends(n, 0), big(n, 0);
    for (int e = 0; e < g.m(); ++e)
        if (!tree[e]) {
            auto [a, b] = g.edge(e);
            ++cdeg[a], ++cdeg[b];
            ++edges[co.find(a)];
        }
    for (int v = 0; v < n; ++v) {
        int r = co.find(v);
        ++verts[r];
        if (cdeg[v] == 1) {
            ++ends[r];
            if (t.is_outer(v)) ++outer_ends[r];
        }
        if (cdeg[v] > 2) big[r] = 1;
    }
    ConsistentForest f;
    f.tmpl = tp;
    f.labels.assign(g.m(), Label::T);
    for (int e = 0; e < g.m(); ++e) {
        if (tree[e]) continue;
        int r = co.find(g.edge(e).first);
        if (edges[r] == 1) {
            f.labels[e] = Label::M;
            continue;
        }
        if (big[r]) return std::nullopt;
        bool cycle = ends[r] == 0 && edges[r] == verts[r];
        bool outer_path = ends[r] == 2 && outer_ends[r] == 2 && edges[r] == verts[r] - 1;
        if (!cycle && !outer_path) return std::nullopt;
        f.labels[e] = Label::C;
    }
    int k = t.outer_count();
    f.assignment.resize(k);
    f.component.resize(k);
    std::map<int, int> first;
    for (int w = 0; w < k; ++w) {
        int v = t.outer_vertex(w);
        f.assignment[w] = f.labels[g.incident(v)[0]];
        f.component[w] = first.emplace(tr.find(v), w).first->second;
    }
    return f;
}

std::optional<ConsistentForest> forest_from_labels_ptr(const TemplatePtr& tp, const std::vector<Label>& labels) {
    std::vector<char> tree(labels.size());
    for (size_t e = 0; e < labels.size(); ++e) tree[e] = labels[e] == Label::T;
    auto f = forest_from_tree_ptr(tp, tree);
    if (!f || f->labels != labels) return std::nullopt;
    return f;
}

LabelProblem outer_problem(const TemplateGraph& y, const std::vector<Label>& assignment) {
    LabelProblem p;
    p.graph = &y.graph;
    p.outer = y.outer_mask();
    p.spanning = false;
    p.allowed.assign(y.graph.m(), kAnyLabel);
    for (int w = 0; w < y.outer_count(); ++w)
        p.allowed[y.graph.incident(y.outer_vertex(w))[0]] = label_bit(assignment[w]);
    return p;
}

LabelProblem naive_problem(const ConsistentForest& fx, const TemplateGraph& y) {
    if (fx.assignment.size() != static_cast<size_t>(y.outer_count()))
        throw std::invalid_argument("templates have different outer sets");
    LabelProblem p = outer_problem(y, fx.assignment);
    p.group.assign(y.graph.n(), -1);
    for (int w = 0; w < y.outer_count(); ++w)
        if (fx.assignment[w] == Label::T) p.group[y.outer_vertex(w)] = fx.component[w];
    return p;
}

}  // namespace

std::optional<ConsistentForest> forest_from_tree(const TemplateGraph& t, const std::vector<char>& tree) {
    return forest_from_tree_ptr(std::make_shared<const TemplateGraph>(t), tree);
}

std::optional<ConsistentForest> forest_from_labels(const TemplateGraph& t, const std::vector<Label>& labels) {
    return forest_from_labels_ptr(std::make_shared<const TemplateGraph>(t), labels);
}

std::vector<ConsistentForest> enumerate_consistent_forests(const TemplateGraph& t) {
    auto tp = std::make_shared<const TemplateGraph>(t);
    LabelProblem p;
    p.graph = &tp->graph;
    p.outer = tp->outer_mask();
    p.spanning = false;
    std::vector<ConsistentForest> out;
    label_search(p, 0, [&](const std::vector<Label>& ls) {
        auto f = forest_from_labels_ptr(tp, ls);
        if (!f) throw std::logic_error("label search produced an inconsistent forest " + labels_str(ls));
        out.push_back(std::move(*f));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

ConsistentForest permute_forest(const ConsistentForest& f, const std::vector<int>& sigma) {
    const Graph& g = f.tmpl->graph;
    std::vector<Label> ls(g.m());
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        int id = g.edge_id(sigma[a], sigma[b]);
        if (id < 0) throw std::invalid_argument("permutation is not an automorphism");
        ls[e] = f.labels[id];
    }
    auto r = forest_from_labels_ptr(f.tmpl, ls);
    if (!r) throw std::invalid_argument("permutation is not an automorphism");
    return *r;
}

std::vector<int> forest_orbits(const std::vector<ConsistentForest>& forests,
                               const std::vector<std::vector<int>>& group) {
    std::map<std::vector<Label>, int> index;
    for (size_t i = 0; i < forests.size(); ++i) index[forests[i].labels] = static_cast<int>(i);
    std::vector<int> orbit(forests.size(), -1);
    for (size_t i = 0; i < forests.size(); ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = static_cast<int>(i);
        for (const auto& g : group) {
            auto it = index.find(permute_forest(forests[i], g).labels);
            if (it != index.end()) orbit[it->second] = static_cast<int>(i);
        }
    }
    return orbit;
}

namespace {

int host_vertex(const TemplateGraph& t, const Embedding& emb, int v) {
    return t.is_outer(v) ? emb.psi[v - t.core_size] : emb.phi[v];
}

int host_edge(const Graph& host, const TemplateGraph& t, const Embedding& emb, int e) {
    auto [a, b] = t.graph.edge(e);
    int id = host.edge_id(host_vertex(t, emb, a), host_vertex(t, emb, b));
    if (id < 0) throw std::invalid_argument("embedding does not match the host");
    return id;
}

// emb composed with a template automorphism: frame vertex v sits at emb(sigma v)
Embedding compose(const TemplateGraph& t, const Embedding& emb, const std::vector<int>& sigma) {
    Embedding r;
    for (int a = 0; a < t.core_size; ++a) r.phi.push_back(host_vertex(t, emb, sigma[a]));
    for (int w = 0; w < t.outer_count(); ++w) r.psi.push_back(host_vertex(t, emb, sigma[t.outer_vertex(w)]));
    return r;
}

}  // namespace

ConsistentForest restrict_decomposition(const Graph& host, const ThreeDecomposition& d, const TemplateGraph& t,
                                        const Embedding& emb) {
    std::vector<Label> ls(t.graph.m());
    for (int e = 0; e < t.graph.m(); ++e) ls[e] = d.labels[host_edge(host, t, emb, e)];
    auto f = forest_from_labels(t, ls);
    if (!f) throw std::logic_error("restriction to " + t.name + " is not 3-consistent: " + labels_str(ls));
    return *f;
}

std::optional<ConsistentForest> is_naively_extendable(const ConsistentForest& fx, const TemplateGraph& y) {
    auto yp = std::make_shared<const TemplateGraph>(y);
    LabelProblem p = naive_problem(fx, *yp);
    std::optional<ConsistentForest> out;
    label_search(p, 0, [&](const std::vector<Label>& ls) {
        out = forest_from_labels_ptr(yp, ls);
        return false;
    });
    if (out && (out->assignment != fx.assignment)) throw std::logic_error("witness realises another assignment");
    return out;
}

std::vector<ConsistentForest> naive_witnesses(const ConsistentForest& fx, const TemplateGraph& y) {
    auto yp = std::make_shared<const TemplateGraph>(y);
    LabelProblem p = naive_problem(fx, *yp);
    std::vector<ConsistentForest> out;
    label_search(p, 0, [&](const std::vector<Label>& ls) {
        out.push_back(*forest_from_labels_ptr(yp, ls));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

Realization realize_assignment(const TemplateGraph& y, const std::vector<Label>& assignment, std::uint64_t budget) {
    if (assignment.size() != static_cast<size_t>(y.outer_count()))
        throw std::invalid_argument("assignment does not cover the outer vertices");
    auto yp = std::make_shared<const TemplateGraph>(y);
    LabelProblem p = outer_problem(*yp, assignment);
    Realization r;
    auto st = label_search(p, budget, [&](const std::vector<Label>& ls) {
        r.forest = forest_from_labels_ptr(yp, ls);
        return false;
    });
    r.nodes = st.nodes;
    r.status = st.status;
    return r;
}

// ---------------------------------------------------------------- manual rules

namespace {

struct RuleContext {
    const Graph& host;
    const ThreeDecomposition& d;
    const TemplateGraph& x;
    const TemplateGraph& y;
    Embedding emb;  // x in the rule's frame

    int hx(int v) const { return host_vertex(x, emb, v); }

    // components of the host tree without the given template edges of x
    std::vector<int> tree_components_without(const std::vector<Edge>& x_edges) const {
        std::vector<char> skip(host.m(), 0);
        for (auto [a, b] : x_edges) skip[host.edge_id(hx(a), hx(b))] = 1;
        Dsu dsu(host.n());
        for (int e = 0; e < host.m(); ++e)
            if (d.labels[e] == Label::T && !skip[e]) dsu.unite(host.edge(e).first, host.edge(e).second);
        std::vector<int> c(host.n());
        for (int v = 0; v < host.n(); ++v) c[v] = dsu.find(v);
        return c;
    }
};

// Y labels in template edge order; every edge defaults to T
struct YLabels {
    const TemplateGraph& y;
    std::vector<Label> ls;
    explicit YLabels(const TemplateGraph& t) : y(t), ls(t.graph.m(), Label::T) {}
    void set(int a, int b, Label l) {
        int e = y.graph.edge_id(a, b);
        if (e < 0) throw std::logic_error("rule names a missing edge");
        ls[e] = l;
    }
    void cycle(std::initializer_list<int> vs, Label l = Label::C) {
        std::vector<int> v(vs);
        for (size_t i = 0; i < v.size(); ++i) set(v[i], v[(i + 1) % v.size()], l);
    }
};

struct ManualRule {
    const char* id;
    const char* pair;
    const char* forest;  // x labels in template edge order
    std::function<std::vector<Label>(const RuleContext&)> apply;
};

// square vertices u1..u4 = 0..3, outers v1..v4 = 4..7; twin-house and domino
// add u5, u6 = 4, 5 with outers at 6..9
constexpr int U1 = 0, U2 = 1, U3 = 2, U4 = 3, U5 = 4, U6 = 5;

std::string square_key(const std::string& fig) {
    // display order -> square template edge order (u1u2 u1u3 v1 u2u4 v2 u3u4 v3 v4)
    std::string k = {fig[0], fig[1], fig[4], fig[2], fig[5], fig[3], fig[6], fig[7]};
    for (char& ch : k) ch = static_cast<char>(std::toupper(ch));
    return k;
}

const std::vector<ManualRule>& manual_rules() {
    static const std::vector<ManualRule> rules = [] {
        std::vector<ManualRule> rs;
        // M at v1: everything is tree except a 5-cycle through the vertex carrying v1
        rs.push_back({"petv-m", "node-petv", "MTT", [](const RuleContext& c) {
                          YLabels y(c.y);
                          y.cycle({0, 1, 2, 7, 5});
                          return y.ls;
                      }});
        static const std::string th_a = square_key("tmmttttt"), th_b = square_key("mtttttmm"),
                                 dom = square_key("ttmtmtmt");
        rs.push_back({"twin-house-a", "square-twin-house", th_a.c_str(), [](const RuleContext& c) {
                          auto comp = c.tree_components_without({{U1, U2}, {U3, U4}});
                          auto same = [&](int a, int b) { return comp[c.hx(a)] == comp[c.hx(b)]; };
                          YLabels y(c.y);
                          y.set(U1, U2, Label::M);
                          if (same(U2, U3) || same(U1, U4)) {
                              y.set(U5, U4, Label::M);
                              y.set(U6, U3, Label::M);
                          } else {
                              y.set(U5, U3, Label::M);
                              y.set(U6, U4, Label::M);
                          }
                          return y.ls;
                      }});
        rs.push_back({"twin-house-b", "square-twin-house", th_b.c_str(), [](const RuleContext& c) {
                          YLabels y(c.y);
                          y.cycle({U3, U5, U4, U6});
                          return y.ls;
                      }});
        rs.push_back({"domino-bad", "square-domino", dom.c_str(), [](const RuleContext& c) {
                          auto comp = c.tree_components_without({{U1, U2}, {U1, U3}, {U3, U4}});
                          int v1 = c.emb.psi[0], v3 = c.emb.psi[2];
                          YLabels y(c.y);
                          if (comp[v3] != comp[c.hx(U4)]) {
                              y.cycle({U1, U2, U6, U5});
                          } else if (comp[v1] != comp[c.hx(U2)]) {
                              y.cycle({U5, U6, U4, U3});
                          } else {
                              throw ManualCaseUnresolved(
                                  "domino behaviour with v3 in H4 and v1 in H2: the square-to-edge reduction is "
                                  "3-connected and should have been taken");
                          }
                          return y.ls;
                      }});
        return rs;
    }();
    return rules;
}

const ManualRule* find_rule(const std::string& pair, const std::string& forest) {
    for (const auto& r : manual_rules())
        if (pair == r.pair && forest == r.forest) return &r;
    return nullptr;
}

struct RuleMatch {
    const ManualRule* rule;
    PairSymmetry sym;
};

std::optional<RuleMatch> match_rule(const TransformationPair& pair, const ConsistentForest& fx) {
    for (const auto& s : pair_symmetries(pair))
        if (auto r = find_rule(pair.name, permute_forest(fx, s.x).str())) return RuleMatch{r, s};
    return std::nullopt;
}

}  // namespace

std::optional<std::string> manual_rule_for(const TransformationPair& pair, const ConsistentForest& fx) {
    if (auto m = match_rule(pair, fx)) return std::string(m->rule->id);
    return std::nullopt;
}

// ---------------------------------------------------------------- reports

int CompatReport::naive_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.witness.has_value(); }));
}

int CompatReport::manual_count() const { return static_cast<int>(entries.size()) - naive_count(); }

int CompatReport::manual_classes() const {
    std::set<int> s;
    for (const auto& e : entries)
        if (!e.witness) s.insert(e.orbit);
    return static_cast<int>(s.size());
}

bool CompatReport::complete() const {
    return std::all_of(entries.begin(), entries.end(), [](auto& e) { return e.witness || !e.rule.empty(); });
}

CompatReport check_compatibility(const TransformationPair& pair) {
    CompatReport r;
    r.pair = pair;
    auto forests = enumerate_consistent_forests(pair.x);
    std::vector<std::vector<int>> group;
    for (const auto& s : pair_symmetries(pair)) group.push_back(s.x);
    auto orbit = forest_orbits(forests, group);
    for (size_t i = 0; i < forests.size(); ++i) {
        CompatEntry e;
        e.forest = forests[i];
        e.orbit = orbit[i];
        e.witness = is_naively_extendable(forests[i], pair.y);
        if (!e.witness) e.rule = manual_rule_for(pair, forests[i]).value_or("");
        r.entries.push_back(std::move(e));
    }
    return r;
}

const CompatReport& compatibility(const TransformationPair& pair) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CompatReport>> cache;
    std::string key = serialize_pair(pair);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto r = std::make_unique<CompatReport>(check_compatibility(pair));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.emplace(key, std::move(r));
    return *it->second;
}

std::string format_report(const CompatReport& r) {
    std::ostringstream out;
    auto names = [](const TemplateGraph& t) {
        std::string s;
        for (int e = 0; e < t.graph.m(); ++e) s += (e ? " " : "") + t.edge_name(e);
        return s;
    };
    out << "pair " << r.pair.name << "\n";
    out << "x " << r.pair.x.name << ": " << names(r.pair.x) << "\n";
    out << "y " << r.pair.y.name << ": " << names(r.pair.y) << "\n";
    for (size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        out << "forest " << i << " " << e.forest.str() << " class " << e.orbit;
        if (e.witness)
            out << " naive " << e.witness->str();
        else
            out << " manual " << (e.rule.empty() ? "UNCOVERED" : e.rule);
        out << "\n";
    }
    out << "forests: " << r.entries.size() << "\n";
    out << "naive: " << r.naive_count() << "\n";
    out << "manual forests: " << r.manual_count() << "\n";
    out << "manual: " << r.manual_classes() << "\n";
    out << "status: " << (r.complete() ? "COMPLETE" : "INCOMPLETE") << "\n";
    return out.str();
}

// ---------------------------------------------------------------- lifting

LiftResult lift_decomposition(const Graph& host, const ThreeDecomposition& d, const TransformationPair& pair,
                              const Embedding& emb_x) {
    auto fx = restrict_decomposition(host, d, pair.x, emb_x);
    const auto& report = compatibility(pair);
    auto it = std::lower_bound(report.entries.begin(), report.entries.end(), fx,
                               [](const CompatEntry& e, const ConsistentForest& f) { return e.forest < f; });
    if (it == report.entries.end() || !(it->forest == fx)) throw std::logic_error("restricted forest not enumerated");

    LiftResult out;
    out.forest_index = static_cast<int>(it - report.entries.begin());
    std::vector<Label> yl;
    if (it->witness) {
        yl = it->witness->labels;
        out.rule = "naive";
    } else {
        auto m = match_rule(pair, fx);
        if (!m) throw ManualCaseUnresolved("no rule for " + pair.name + " forest " + fx.str());
        RuleContext ctx{host, d, pair.x, pair.y, compose(pair.x, emb_x, m->sym.x)};
        auto framed = m->rule->apply(ctx);
        yl.assign(pair.y.graph.m(), Label::T);
        for (int e = 0; e < pair.y.graph.m(); ++e) {
            auto [a, b] = pair.y.graph.edge(e);
            yl[pair.y.graph.edge_id(m->sym.y[a], m->sym.y[b])] = framed[e];
        }
        out.rule = m->rule->id;
    }

    out.extended = extend(host, pair, emb_x);
    const Graph& h = out.extended.graph;
    std::vector<char> set(h.m(), 0);
    out.decomposition.labels.assign(h.m(), Label::T);
    for (int e = 0; e < host.m(); ++e) {
        auto [a, b] = host.edge(e);
        int ra = out.extended.host_map[a], rb = out.extended.host_map[b];
        if (ra < 0 || rb < 0) continue;
        int id = h.edge_id(ra, rb);
        out.decomposition.labels[id] = d.labels[e];
        set[id] = 1;
    }
    for (int e = 0; e < pair.y.graph.m(); ++e) {
        int id = host_edge(h, pair.y, out.extended.embedding, e);
        out.decomposition.labels[id] = yl[e];
        set[id] = 1;
    }
    if (std::find(set.begin(), set.end(), 0) != set.end()) throw std::logic_error("lift left an edge unlabelled");
    auto v = verify(h, out.decomposition);
    if (!v) throw std::logic_error("lifted decomposition (" + out.rule + ") fails: " + v.diagnostic);
    return out;
}

// ---------------------------------------------------------------- square census

std::string square_string(const ConsistentForest& f) {
    static const int order[8][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    const Graph& g = f.tmpl->graph;
    std::string s;
    for (auto& p : order) {
        int e = g.edge_id(p[0], p[1]);
        if (e < 0) throw std::invalid_argument("not a square template");
        s += static_cast<char>(std::tolower(label_char(f.labels[e])));
    }
    return s;
}

const std::vector<std::string>& square_representatives() {
    static const std::vector<std::string> reps = {
        "cccctttt", "ctctcttc", "ttcctcct", "cttmcctt", "tmcttctc", "mttcttcc", "tcmtctct", "ctttcctt", "ttcttctc",
        "tttcttcc", "tcttctct", "mttmtttt", "tmmttttt", "mtttttmm", "ttmtmtmt", "tttmmmtt", "tmtttmtm", "mttttttt"};
    return reps;
}

int square_representative(const ConsistentForest& f) {
    const auto& reps = square_representatives();
    auto it = std::find(reps.begin(), reps.end(), square_string(f));
    return it == reps.end() ? 0 : static_cast<int>(it - reps.begin()) + 1;
}

namespace {

// display position -> square template edge endpoints
constexpr int kSquarePos[8][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
enum Pos { A = 0, B, Cq, D, V1, V2, V3, V4 };

std::vector<int> rotation(int k) {
    // u1 -> u2 -> u4 -> u3 -> u1 along the square, outers follow
    std::vector<int> r = {1, 3, 0, 2, 5, 7, 4, 6}, p = {0, 1, 2, 3, 4, 5, 6, 7};
    for (int i = 0; i < k; ++i) {
        std::vector<int> q(8);
        for (int v = 0; v < 8; ++v) q[v] = r[p[v]];
        p = q;
    }
    return p;
}

}  // namespace

SwitchResult switch_to_representative(const Graph& host, const ThreeDecomposition& d, const Embedding& square) {
    const TemplateGraph& sq = builtin_template("square");
    SwitchResult out{d, {}};
    auto d4 = template_automorphisms(sq);
    std::vector<std::vector<int>> c4;
    for (int k = 0; k < 4; ++k) c4.push_back(rotation(k));

    for (int round = 0; round < 4; ++round) {
        auto f = restrict_decomposition(host, out.decomposition, sq, square);
        if (square_representative(f)) return out;

        std::string family;
        std::vector<std::pair<int, Label>> edits;
        std::vector<int> frame;
        auto framed = [&](const std::vector<int>& g) { return square_string(permute_forest(f, g)); };
        for (const auto& g : d4) {
            std::string s = framed(g);
            if (s == "tctccttc") {
                family = "S1", frame = g;
                edits = {{A, Label::C}, {Cq, Label::C}, {B, Label::T}, {D, Label::T}};
            } else if (s == "ctttccmt") {
                family = "S2", frame = g, edits = {{D, Label::M}, {V3, Label::T}};
            } else if (s == "ctttcctm") {
                family = "S2", frame = g, edits = {{D, Label::M}, {V4, Label::T}};
            }
            if (!family.empty()) break;
        }
        for (size_t k = 0; k < c4.size() && family.empty(); ++k) {
            const auto& g = c4[k];
            std::string s = framed(g);
            if (s == "ttmtttmt") {
                family = "S3", frame = g, edits = {{A, Label::M}, {Cq, Label::T}};
            } else if (s == "mtttttmt") {
                family = "S4", frame = g;
                // does the tree path from u3 to the far end of its M edge start with u3u4?
                Embedding e = compose(sq, square, g);
                int u3 = e.phi[2], u4 = e.phi[3], v3 = e.psi[2];
                Dsu dsu(host.n());
                for (int id = 0; id < host.m(); ++id) {
                    auto [a, b] = host.edge(id);
                    bool is_d = (a == u3 && b == u4) || (a == u4 && b == u3);
                    if (out.decomposition.labels[id] == Label::T && !is_d) dsu.unite(a, b);
                }
                if (dsu.find(u3) != dsu.find(v3))
                    edits = {{D, Label::M}, {V3, Label::T}};
                else
                    edits = {{A, Label::T}, {Cq, Label::M}, {B, Label::M}, {V3, Label::T}};
            }
        }
        if (family.empty()) {
            std::string s = square_string(f);
            int pos = s == "tmtttttt" ? B : s == "ttmttttt" ? Cq : s == "tttmtttt" ? D : -1;
            if (pos >= 0) {
                family = "S5", frame = rotation(0);
                edits = {{A, Label::M}, {pos, Label::T}};
            }
        }
        if (family.empty()) throw std::logic_error("no switch applies to square behaviour " + square_string(f));

        Embedding e = compose(sq, square, frame);
        for (auto [pos, l] : edits) {
            int id = host.edge_id(host_vertex(sq, e, kSquarePos[pos][0]), host_vertex(sq, e, kSquarePos[pos][1]));
            out.decomposition.labels[id] = l;
        }
        auto v = verify(host, out.decomposition);
        if (!v) throw std::logic_error("switch " + family + " broke the decomposition: " + v.diagnostic);
        out.steps.push_back(family);
    }
    throw std::logic_error("switching did not reach a representative");
}

}  // namespace cubic3dec
