#include <random>
#include <set>

#include "cubic3dec/decomp.hpp"
#include "cubic3dec/generate.hpp"
#include "cubic3dec/graph6.hpp"
#include "cubic3dec/hist.hpp"
#include "cubic3dec/named.hpp"
#include "doctest.h"
#include "../oracle/oracle.hpp"

using namespace cubic3dec;

namespace {

ThreeDecomposition labelled(const Graph& g, std::initializer_list<std::pair<Edge, Label>> ls) {
    ThreeDecomposition d{std::vector<Label>(g.m(), Label::T)};
    for (auto& [e, l] : ls) d.labels[g.edge_id(e.first, e.second)] = l;
    return d;
}

std::vector<char> random_tree(const Graph& g, std::mt19937& rng) {
    std::vector<int> order(g.m());
    for (int e = 0; e < g.m(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> p(g.n());
    for (int v = 0; v < g.n(); ++v) p[v] = v;
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    std::vector<char> in(g.m(), 0);
    for (int e : order) {
        int a = find(g.edge(e).first), b = find(g.edge(e).second);
        if (a != b) {
            p[a] = b;
            in[e] = 1;
        }
    }
    return in;
}

bool complement_ok(const ColouredGraph& cg) {
    ThreeDecomposition d;
    return decomposition_from_tree(cg.graph, cg.tree(), d).ok;
}

}  // namespace

TEST_CASE("verify examples") {
    Graph k4 = named::k4();
    auto star = labelled(k4, {{{1, 2}, Label::C}, {{1, 3}, Label::C}, {{2, 3}, Label::C}});
    CHECK(verify(k4, star).ok);
    auto path = labelled(k4, {{{0, 2}, Label::M}, {{0, 3}, Label::M}, {{1, 3}, Label::M}});
    auto r = verify(k4, path);
    CHECK_FALSE(r.ok);
    CHECK(r.diagnostic.find("matching") != std::string::npos);
    CHECK(r.diagnostic.find("vertex 0") != std::string::npos);
    ThreeDecomposition all_t{std::vector<Label>(6, Label::T)};
    CHECK_FALSE(verify(k4, all_t).ok);
    CHECK_THROWS(verify(k4, ThreeDecomposition{std::vector<Label>(5, Label::T)}));
}

TEST_CASE("certificate recomputation") {
    Graph k4 = named::k4();
    ThreeDecomposition d;
    CHECK(decomposition_from_tree(k4, {{0, 1}, {0, 2}, {0, 3}}, d).ok);
    CHECK(labels_str(d.labels) == "TTTCCC");
    auto bad = decomposition_from_tree(k4, {{0, 1}, {1, 2}, {2, 3}}, d);
    CHECK_FALSE(bad.ok);
    CHECK(bad.diagnostic.find("path of length >= 2") != std::string::npos);
    CHECK(write_certificate(k4, labelled(k4, {{{1, 2}, Label::C}, {{1, 3}, Label::C}, {{2, 3}, Label::C}})) ==
          "C~\n0-1 0-2 0-3\n");
    CHECK(parse_tree_line("0-1 2-3") == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS(parse_tree_line("0-1 2--3"));
    CHECK_THROWS(parse_tree_line("01"));
}

TEST_CASE("solve named graphs") {
    for (const auto& g : {named::k4(), named::k33(), named::petersen(), named::prism(), named::cube()}) {
        auto r = solve(g);
        REQUIRE(r.status == SolveStatus::Found);
        CHECK(verify(g, r.decomposition).ok);
        auto e = solve_exhaustive(g);
        REQUIRE(e.status == SolveStatus::Found);
        CHECK(verify(g, e.decomposition).ok);
    }
    CHECK_THROWS(solve(named::cycle(4)));
    CHECK_THROWS(solve(Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})));
}

TEST_CASE("solve every connected cubic graph up to 12 vertices") {
    for (int n = 4; n <= 12; n += 2)
        for (const auto& g : connected_cubic_graphs(n)) {
            auto h = solve_heuristic(g, 200, 7);
            if (h) CHECK(verify(g, *h).ok);
            auto e = solve_exhaustive(g);
            REQUIRE(e.status == SolveStatus::Found);
            CHECK(verify(g, e.decomposition).ok);
        }
}

TEST_CASE("budgeted search reports unknown, never none") {
    auto r = solve_exhaustive(named::petersen(), 1);
    CHECK(r.status != SolveStatus::None);
}

TEST_CASE("exhaustive labelling equals spanning tree brute force") {
    for (int n = 4; n <= 8; n += 2)
        for (const auto& g : connected_cubic_graphs(n)) {
            std::set<std::vector<int>> mine;
            enumerate_decompositions(g, [&](const ThreeDecomposition& d) {
                CHECK(verify(g, d).ok);
                std::vector<int> t;
                for (int e = 0; e < g.m(); ++e)
                    if (d.labels[e] == Label::T) t.push_back(e);
                CHECK(mine.insert(t).second);
                return true;
            });
            CHECK(mine == oracle::decomposition_trees(g));
        }
}

TEST_CASE("is_hist") {
    Graph k4 = named::k4();
    CHECK(is_hist(k4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK_FALSE(is_hist(k4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK_THROWS(is_hist(k4, {{0, 1}, {1, 2}}));
    CHECK_THROWS(is_hist(k4, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("hist_reduce base and prism cases") {
    Graph k4 = named::k4();
    auto star = labelled(k4, {{{1, 2}, Label::C}, {{1, 3}, Label::C}, {{2, 3}, Label::C}});
    auto r0 = hist_reduce(k4, star);
    CHECK(r0.steps.empty());
    CHECK(r0.terminal.graph == k4);

    Graph prism = named::prism();
    auto d = labelled(prism, {{{0, 1}, Label::M}, {{3, 4}, Label::C}, {{3, 5}, Label::C}, {{4, 5}, Label::C}});
    REQUIRE(verify(prism, d).ok);
    auto r = hist_reduce(prism, d);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].kind == StepKind::TutteReduction);
    CHECK(r.steps[0].proof_case == 'a');
    CHECK(r.terminal.graph.n() == 4);
    CHECK(r.terminal.graph == k4);
    CHECK(is_hist(r.terminal.graph, r.terminal.tree()));
    auto back = replay(r);
    CHECK(back.graph == prism);
    CHECK(back.decomposition() == d);
}

TEST_CASE("hist_reduce over all decompositions up to 10 vertices") {
    int cases[4] = {0, 0, 0, 0};
    for (int n = 4; n <= 10; n += 2)
        for (const auto& g : connected_cubic_graphs(n)) {
            int k = 0;
            enumerate_decompositions(g, [&](const ThreeDecomposition& d) {
                auto r = hist_reduce(g, d);
                CHECK(static_cast<int>(r.steps.size()) <= n / 2);
                int prev = n;
                for (const auto& s : r.steps) {
                    CHECK(s.n_before == prev);
                    prev -= s.kind == StepKind::TutteReduction ? 2 : 4;
                    ++cases[s.proof_case - 'a'];
                }
                CHECK(r.terminal.graph.n() == prev);
                CHECK(is_hist(r.terminal.graph, r.terminal.tree()));
                auto back = replay(r);
                CHECK(back.graph == g);
                CHECK(back.decomposition() == d);
                return ++k < 40;
            });
        }
    for (int c : cases) CHECK(c > 0);
}

TEST_CASE("coloured extensions") {
    Graph k4 = named::k4();
    ColouredGraph cg = ColouredGraph::from(k4, labelled(k4, {{{1, 2}, Label::C}, {{1, 3}, Label::C}, {{2, 3}, Label::C}}));
    auto t = tutte_extend(cg, {0, 1}, {0, 2});
    CHECK(t.graph.n() == 6);
    CHECK(t.graph.is_cubic());
    CHECK(t.tree().size() == 5);
    CHECK(verify(t.graph, t.decomposition()).ok);
    auto dm = diamond_extend(cg, {0, 3});
    CHECK(dm.graph.n() == 8);
    CHECK(dm.tree().size() == 7);
    CHECK(verify(dm.graph, dm.decomposition()).ok);
    CHECK_THROWS(tutte_extend(cg, {1, 2}, {0, 1}));
    CHECK_THROWS(tutte_extend(cg, {0, 1}, {0, 1}));
}

TEST_CASE("extensions preserve the complement shape both ways") {
    std::mt19937 rng(3);
    auto graphs = connected_cubic_graphs(10);
    int good = 0, bad = 0;
    for (int i = 0; i < 400; ++i) {
        const auto& g = graphs[rng() % graphs.size()];
        ColouredGraph cg{g, random_tree(g, rng)};
        auto tr = cg.tree();
        bool before = complement_ok(cg);
        ColouredGraph after = (i % 2) ? diamond_extend(cg, tr[rng() % tr.size()])
                                      : [&] {
                                            int a = rng() % tr.size(), b = rng() % tr.size();
                                            if (a == b) b = (b + 1) % tr.size();
                                            return tutte_extend(cg, tr[a], tr[b]);
                                        }();
        CHECK(complement_ok(after) == before);
        (before ? good : bad)++;
    }
    CHECK(good > 0);
    CHECK(bad > 0);
}
