#include <algorithm>
#include <sstream>

#include "cubic3dec/batch.hpp"
#include "cubic3dec/decomp.hpp"
#include "cubic3dec/generate.hpp"
#include "cubic3dec/named.hpp"
#include "doctest.h"
#include "../oracle/oracle.hpp"

using namespace cubic3dec;

namespace {

std::vector<CorpusRecord> corpus_upto(int n_max) {
    std::vector<CorpusRecord> out;
    for (int n = 4; n <= n_max; n += 2)
        for (const auto& g : connected_cubic_graphs(n))
            out.push_back({static_cast<int>(out.size()) + 1, write_graph6(g)});
    return out;
}

}  // namespace

TEST_CASE("batch certifies every graph up to 12 vertices") {
    auto corpus = corpus_upto(12);
    CHECK(corpus.size() == 1 + 2 + 5 + 19 + 85);
    for (auto mode : {BatchMode::Solve, BatchMode::Reduce}) {
        BatchOptions opt;
        opt.mode = mode;
        auto s = run_batch(corpus, opt);
        CHECK(s.count(RecordStatus::Certified) == static_cast<int>(corpus.size()));
        std::istringstream certs(certificates_text(s));
        auto table = read_certificates(certs);
        for (const auto& c : check_certificates(corpus, table)) CHECK_MESSAGE(c.ok, c.key << ": " << c.diagnostic);
        if (mode == BatchMode::Reduce) {
            int reduced = 0;
            for (const auto& r : s.records) reduced += r.reductions > 0;
            CHECK(reduced > 50);
        }
    }
}

TEST_CASE("batch output is independent of the job count") {
    auto corpus = corpus_upto(12);
    BatchOptions one, many;
    many.jobs = 6;
    CHECK(certificates_text(run_batch(corpus, one)) == certificates_text(run_batch(corpus, many)));
    many.mode = one.mode = BatchMode::Reduce;
    CHECK(certificates_text(run_batch(corpus, one)) == certificates_text(run_batch(corpus, many)));
}

TEST_CASE("bad records are skipped with a diagnostic") {
    std::vector<CorpusRecord> corpus = {{1, "C~"}, {2, write_graph6(named::cycle(5))}, {3, "C?"}, {4, "!!"}};
    Graph two_k4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    corpus.push_back({5, write_graph6(two_k4)});
    auto s = run_batch(corpus, {});
    CHECK(s.records[0].status == RecordStatus::Certified);
    CHECK(s.records[1].diagnostic == "not cubic");
    CHECK(s.records[2].diagnostic == "not cubic");
    CHECK(s.records[3].diagnostic.rfind("parse error", 0) == 0);
    CHECK(s.records[4].diagnostic == "not connected");
    CHECK(s.count(RecordStatus::Skipped) == 4);
    auto text = format_summary(s);
    CHECK(text.find("skipped line 4") != std::string::npos);
    CHECK(certificates_text(s) == "C~\n0-1 0-2 0-3\n");
}

TEST_CASE("certificate checking catches mutations") {
    std::vector<CorpusRecord> corpus = {{1, "C~"}, {2, write_graph6(named::cube())}};
    auto cube = named::cube();
    auto r = solve(cube);
    REQUIRE(r.status == SolveStatus::Found);
    auto tree = tree_edges(cube, r.decomposition);

    std::map<std::string, std::string> certs;
    certs["C~"] = "0-1 1-2 2-3";  // complement 2-0-3-1 is a path
    auto out = check_certificates(corpus, certs);
    CHECK_FALSE(out[0].ok);
    CHECK(out[0].diagnostic.find("path of length >= 2") != std::string::npos);
    CHECK_FALSE(out[1].ok);
    CHECK(out[1].diagnostic == "missing certificate");

    // swap one tree edge for a non-tree edge; the oracle says which results are still valid
    auto valid = oracle::decomposition_trees(cube);
    int flips = 0, agree = 0, rejected = 0;
    for (size_t i = 0; i < tree.size(); ++i)
        for (auto e : cube.edges()) {
            if (std::find(tree.begin(), tree.end(), e) != tree.end()) continue;
            auto t = tree;
            t[i] = e;
            certs[write_graph6(cube)] = tree_line(t);
            std::vector<int> ids;
            for (auto f : t) ids.push_back(cube.edge_id(f.first, f.second));
            std::sort(ids.begin(), ids.end());
            bool ok = check_certificates(corpus, certs)[1].ok;
            ++flips;
            agree += ok == (valid.count(ids) > 0);
            rejected += !ok;
        }
    CHECK(agree == flips);
    CHECK(rejected > 0);

    certs[write_graph6(cube)] = "0-1 1-x";
    CHECK(check_certificates(corpus, certs)[1].diagnostic.find("malformed") != std::string::npos);
    certs[write_graph6(cube)] = "unknown";
    CHECK(check_certificates(corpus, certs)[1].diagnostic == "certificate marked unknown");
}
