#include "cubic3dec/sat_gadget.hpp"

#include <cstdlib>
#include <sstream>

namespace cubic3dec {

Cnf parse_dimacs(std::istream& in) {
    Cnf f;
    bool header = false;
    int declared = 0;
    std::vector<int> cur;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt;
            if (header || !(ls >> fmt >> f.vars >> declared) || fmt != "cnf" || f.vars < 0 || declared < 0)
                throw CnfError("line " + std::to_string(lineno) + ": bad problem line");
            header = true;
            continue;
        }
        if (!header) throw CnfError("line " + std::to_string(lineno) + ": clause before problem line");
        do {
            char* end = nullptr;
            long v = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') throw CnfError("line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
            if (v == 0) {
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::labs(v) > f.vars)
                    throw CnfError("line " + std::to_string(lineno) + ": variable out of range in '" + tok + "'");
                cur.push_back(static_cast<int>(v));
            }
        } while (ls >> tok);
    }
    if (!header) throw CnfError("missing problem line");
    if (!cur.empty()) throw CnfError("last clause is not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared)
        throw CnfError("problem line declares " + std::to_string(declared) + " clauses, found " +
                       std::to_string(f.clauses.size()));
    return f;
}

std::string write_dimacs(const Cnf& f) {
    std::ostringstream out;
    out << "p cnf " << f.vars << " " << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) {
        for (int l : c) out << l << " ";
        out << "0\n";
    }
    return out.str();
}

void check_3cnf(const Cnf& f) {
    std::vector<char> occurs(f.vars + 1, 0);
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        if (f.clauses[j].size() != 3)
            throw CnfError("clause " + std::to_string(j + 1) + " has " + std::to_string(f.clauses[j].size()) +
                           " literals");
        for (int l : f.clauses[j]) {
            if (l == 0 || std::abs(l) > f.vars) throw CnfError("literal out of range");
            occurs[std::abs(l)] = 1;
        }
    }
    for (int v = 1; v <= f.vars; ++v)
        if (!occurs[v]) throw CnfError("variable " + std::to_string(v) + " does not occur");
}

Cnf pad_formula(const Cnf& f) {
    check_3cnf(f);
    Cnf out = f;
    std::vector<int> bal(f.vars + 1, 0);
    for (const auto& c : f.clauses)
        for (int l : c) bal[std::abs(l)] += l > 0 ? 1 : -1;
    for (int v = 1; v <= f.vars; ++v) {
        for (; bal[v] > 0; --bal[v]) out.clauses.push_back({v, -v, -v});
        for (; bal[v] < 0; ++bal[v]) out.clauses.push_back({v, v, -v});
    }
    return out;
}

bool satisfies(const Cnf& f, const std::vector<bool>& value) {
    for (const auto& c : f.clauses) {
        bool any = false;
        for (int l : c) any = any || (value[std::abs(l) - 1] == (l > 0));
        if (!any) return false;
    }
    return true;
}

bool brute_force_sat(const Cnf& f) {
    if (f.vars > 30) throw std::invalid_argument("too many variables for brute force");
    std::vector<bool> value(f.vars);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.vars); ++a) {
        for (int i = 0; i < f.vars; ++i) value[i] = (a >> i & 1) != 0;
        if (satisfies(f, value)) return true;
    }
    return false;
}

namespace {

struct Builder {
    std::vector<Edge> edges;
    std::vector<int> attach;
    std::vector<Label> labels;
    int n = 0;

    int vertex() { return n++; }
    void leaf(int v, Label l) {
        attach.push_back(v);
        labels.push_back(l);
    }
    // subdivided edge whose middle vertex carries an m-leaf
    void forced(int u, int v) {
        int w = vertex();
        edges.emplace_back(u, w);
        edges.emplace_back(w, v);
        leaf(w, Label::M);
    }
};

}  // namespace

SatGadget sat_to_template(const Cnf& input) {
    SatGadget g;
    g.formula = pad_formula(input);
    const Cnf& f = g.formula;
    int nv = f.vars;

    // occurrence lists: (clause, literal position) per variable and sign
    std::vector<std::vector<int>> pos(nv + 1), neg(nv + 1);
    for (size_t j = 0; j < f.clauses.size(); ++j)
        for (int l : f.clauses[j]) (l > 0 ? pos : neg)[std::abs(l)].push_back(static_cast<int>(j));

    Builder b;
    // outer labels 0..3 are reserved for the two c-leaves and the two t-leaves
    b.attach.resize(4);
    b.labels = {Label::C, Label::C, Label::T, Label::T};

    g.upper.resize(nv);
    g.lower.resize(nv);
    std::vector<int> clause_vertex(f.clauses.size());
    for (auto& c : clause_vertex) c = b.vertex();
    std::vector<int> block_first;  // spine attachment points in block order

    for (int i = 0; i < nv; ++i) {
        int len = static_cast<int>(pos[i + 1].size());
        int s = b.vertex(), t = b.vertex();
        g.s.push_back(s);
        g.t.push_back(t);
        for (auto* path : {&g.upper[i], &g.lower[i]}) {
            int prev = s;
            for (int k = 0; k < 4 * len; ++k) {
                int v = b.vertex();
                path->push_back(v);
                b.edges.emplace_back(prev, v);
                prev = v;
            }
            b.edges.emplace_back(prev, t);
        }
        for (int k = 0; k < len; ++k) {
            const int base = 4 * k;
            b.forced(g.upper[i][base + 1], g.lower[i][base + 1]);
            b.forced(g.upper[i][base + 3], g.lower[i][base + 3]);
            b.forced(clause_vertex[pos[i + 1][k]], g.upper[i][base + 2]);
            b.forced(clause_vertex[neg[i + 1][k]], g.lower[i][base + 2]);
            block_first.push_back(g.upper[i][base]);
            block_first.push_back(g.lower[i][base]);
        }
        if (i > 0) b.edges.emplace_back(g.t[i - 1], s);
    }
    b.attach[0] = g.s.front();
    b.attach[1] = g.t.back();

    std::vector<int> spine;
    for (size_t k = 0; k < block_first.size(); ++k) {
        spine.push_back(b.vertex());
        b.forced(spine.back(), block_first[k]);
        if (k > 0) b.forced(spine[k - 1], spine[k]);
    }
    b.attach[2] = spine.front();
    b.attach[3] = spine.back();

    g.y = template_from_core("sat-gadget", Graph(b.n, b.edges), b.attach);
    g.assignment = b.labels;
    return g;
}

std::vector<bool> decode(const SatGadget& g, const ConsistentForest& f) {
    std::vector<bool> value;
    for (size_t i = 0; i < g.s.size(); ++i) {
        int e = g.y.graph.edge_id(g.s[i], g.upper[i].front());
        value.push_back(f.labels[e] != Label::C);
    }
    return value;
}

GadgetResult realize(const SatGadget& g, std::uint64_t budget) {
    auto r = realize_assignment(g.y, g.assignment, budget);
    GadgetResult out;
    out.status = r.status;
    out.nodes = r.nodes;
    out.realizable = r.forest.has_value();
    if (r.forest) out.value = decode(g, *r.forest);
    return out;
}

HardnessInstance naive_hardness_instance(const SatGadget& g) {
    int k = g.y.outer_count(), r = k - 4;
    // z_0..z_{r-1} carry the m-leaves, q' closes the chain, q carries both c-leaves
    int qp = r, q = r + 1;
    std::vector<Edge> es;
    for (int i = 0; i + 1 < r; ++i) es.emplace_back(i, i + 1);
    if (r > 0) es.emplace_back(r - 1, qp);
    es.emplace_back(qp, q);
    std::vector<int> attach = {q, q, r > 0 ? 0 : qp, qp};
    for (int i = 0; i < r; ++i) attach.push_back(i);
    HardnessInstance h;
    h.x = template_from_core("sat-hardness", Graph(r + 2, es), attach);
    std::vector<Label> ls(h.x.graph.m(), Label::T);
    for (int w = 0; w < k; ++w) ls[h.x.graph.incident(h.x.outer_vertex(w))[0]] = g.assignment[w];
    auto f = forest_from_labels(h.x, ls);
    if (!f) throw std::logic_error("hardness instance forest is not 3-consistent");
    h.forest = *f;
    return h;
}

std::string format_gadget_report(const SatGadget& g, const GadgetResult& r) {
    std::ostringstream out;
    out << "variables: " << g.formula.vars << "\n";
    out << "clauses (padded): " << g.formula.clauses.size() << "\n";
    out << "template: " << g.y.core_size << " inner, " << g.y.outer_count() << " outer, " << g.y.graph.m()
        << " edges\n";
    out << "assignment: " << labels_str(g.assignment) << "\n";
    out << "search nodes: " << r.nodes << "\n";
    if (r.status == SearchStatus::Budget) {
        out << "realizable: unknown (budget)\n";
        return out.str();
    }
    out << "realizable: " << (r.realizable ? "yes" : "no") << "\n";
    if (r.realizable) {
        out << "model:";
        for (size_t i = 0; i < r.value.size(); ++i) out << " " << (r.value[i] ? "" : "-") << i + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace cubic3dec
