#include <random>
#include <sstream>

#include "cubic3dec/sat_gadget.hpp"
#include "doctest.h"
#include "../oracle/oracle.hpp"

using namespace cubic3dec;

namespace {

Cnf cnf(int vars, std::vector<std::vector<int>> clauses) { return Cnf{vars, std::move(clauses)}; }

Cnf random_cnf(std::mt19937& rng, int vars, int clauses) {
    for (;;) {
        Cnf f{vars, {}};
        std::vector<char> seen(vars + 1, 0);
        for (int j = 0; j < clauses; ++j) {
            std::vector<int> c;
            for (int k = 0; k < 3; ++k) {
                int v = static_cast<int>(rng() % vars) + 1;
                seen[v] = 1;
                c.push_back(rng() % 2 ? v : -v);
            }
            f.clauses.push_back(c);
        }
        if (std::count(seen.begin() + 1, seen.end(), 1) == vars) return f;
    }
}

}  // namespace

TEST_CASE("dimacs parsing") {
    std::istringstream ok("c comment\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n");
    auto f = parse_dimacs(ok);
    CHECK(f.vars == 3);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2, 3}, {-1, 2, -3}});
    std::istringstream again(write_dimacs(f));
    CHECK(parse_dimacs(again).clauses == f.clauses);

    for (auto bad : {"1 2 3 0\n", "p cnf 2 1\n1 2 3 0\n", "p cnf 3 2\n1 2 3 0\n", "p cnf 3 1\n1 2 x 0\n",
                     "p cnf 3 1\n1 2 3\n", "p dnf 3 1\n1 2 3 0\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_dimacs(in), CnfError);
    }
}

TEST_CASE("3cnf checks and padding") {
    CHECK_THROWS_AS(check_3cnf(cnf(2, {{1, 2}})), CnfError);
    CHECK_THROWS_AS(check_3cnf(cnf(3, {{1, 2, 2}})), CnfError);  // variable 3 missing
    CHECK_THROWS_AS(sat_to_template(cnf(2, {{1, -2, 1, 2}})), CnfError);

    auto p = pad_formula(cnf(3, {{1, 2, 3}, {1, 2, -3}}));
    std::vector<int> bal(4, 0);
    for (const auto& c : p.clauses)
        for (int l : c) bal[std::abs(l)] += l > 0 ? 1 : -1;
    CHECK(bal == std::vector<int>{0, 0, 0, 0});
    CHECK(p.clauses.size() == 2 + 2 + 2 + 0);

    auto same = pad_formula(cnf(1, {{1, 1, -1}, {1, -1, -1}}));
    CHECK(same.clauses.size() == 2);
}

TEST_CASE("gadget examples") {
    auto taut = sat_to_template(cnf(1, {{1, 1, -1}, {1, -1, -1}}));
    auto r = realize(taut);
    CHECK(r.realizable);

    auto two = sat_to_template(cnf(3, {{1, 2, 3}, {-1, -2, -3}}));
    r = realize(two);
    CHECK(r.realizable);
    CHECK(satisfies(two.formula, r.value));

    // every sign pattern over three variables
    Cnf all{3, {}};
    for (int m = 0; m < 8; ++m) all.clauses.push_back({m & 1 ? 1 : -1, m & 2 ? 2 : -2, m & 4 ? 3 : -3});
    CHECK_FALSE(brute_force_sat(all));
    auto g = sat_to_template(all);
    r = realize(g);
    CHECK(r.status == SearchStatus::Complete);
    CHECK_FALSE(r.realizable);

    // degrees: template_from_core already validated; outer labels are c c t t m...
    CHECK(g.assignment[0] == Label::C);
    CHECK(g.assignment[2] == Label::T);
    for (size_t w = 4; w < g.assignment.size(); ++w) CHECK(g.assignment[w] == Label::M);
}

TEST_CASE("realizability equals satisfiability on random formulas") {
    std::mt19937 rng(7);
    int sat = 0, unsat = 0;
    for (int it = 0; it < 300; ++it) {
        int vars = 1 + static_cast<int>(rng() % 4);
        int clauses = std::max((vars + 2) / 3, 1 + static_cast<int>(rng() % 6));
        if (it % 3 == 0) clauses += 6;  // push some towards unsatisfiable
        auto f = random_cnf(rng, vars, clauses);
        auto g = sat_to_template(f);
        auto r = realize(g);
        bool s = oracle::satisfiable(f.vars, f.clauses);
        CHECK(brute_force_sat(f) == s);
        CHECK(r.realizable == s);
        if (r.realizable) CHECK(satisfies(f, r.value));
        (s ? sat : unsat)++;
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("naive extendability hardness instance") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        auto f = random_cnf(rng, 3, 4 + static_cast<int>(rng() % 8));
        auto g = sat_to_template(f);
        auto h = naive_hardness_instance(g);
        CHECK(h.forest.assignment == g.assignment);
        CHECK(h.forest.component[2] == h.forest.component[3]);
        int t_outers = 0;
        for (auto l : h.forest.assignment) t_outers += l == Label::T;
        CHECK(t_outers == 2);
        CHECK(is_naively_extendable(h.forest, g.y).has_value() == brute_force_sat(f));
    }
}
