#include "cubic3dec/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cubic3dec/decomp.hpp"
#include "cubic3dec/reduce.hpp"

namespace cubic3dec {

namespace {

using Clock = std::chrono::steady_clock;

RecordOutcome process(const CorpusRecord& rec, const BatchOptions& opt) {
    RecordOutcome out;
    out.line = rec.line;
    out.key = rec.text;
    Graph g;
    try {
        g = parse_graph6(rec.text);
    } catch (const std::exception& e) {
        out.diagnostic = std::string("parse error: ") + e.what();
        return out;
    }
    out.key = write_graph6(g);
    out.n = g.n();
    if (!g.is_cubic()) {
        out.diagnostic = "not cubic";
        return out;
    }
    if (!is_connected(g)) {
        out.diagnostic = "not connected";
        return out;
    }
    auto start = Clock::now();
    auto so = default_solve_options();
    so.budget = opt.budget;
    try {
        ThreeDecomposition d;
        SolveStatus st;
        if (opt.mode == BatchMode::Reduce && is_three_connected(g)) {
            auto r = solve_via_reduction(g, so);
            st = r.status;
            d = r.decomposition;
            out.reductions = static_cast<int>(r.trace.size());
        } else {
            auto r = solve(g, so);
            st = r.status;
            d = r.decomposition;
        }
        if (st == SolveStatus::Found) {
            auto v = verify(g, d);
            if (v) {
                out.status = RecordStatus::Certified;
                out.tree = tree_line(tree_edges(g, d));
            } else {
                out.status = RecordStatus::Failed;
                out.diagnostic = "solver output fails verification: " + v.diagnostic;
            }
        } else if (st == SolveStatus::Unknown) {
            out.status = RecordStatus::Unknown;
            out.diagnostic = "budget exhausted";
        } else {
            // no decomposition at all would refute the conjecture; report it loudly
            out.status = RecordStatus::Failed;
            out.diagnostic = "exhaustive search found no 3-decomposition";
        }
    } catch (const std::exception& e) {
        out.status = RecordStatus::Failed;
        out.diagnostic = std::string("internal error: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

}  // namespace

int BatchSummary::count(RecordStatus s) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.status == s; }));
}

BatchSummary run_batch(const std::vector<CorpusRecord>& corpus, const BatchOptions& opt) {
    BatchSummary s;
    s.mode = opt.mode;
    s.records.resize(corpus.size());
    auto start = Clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < corpus.size();) s.records[i] = process(corpus[i], opt);
    };
    int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(corpus.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    s.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return s;
}

std::string certificates_text(const BatchSummary& s) {
    std::string out;
    for (const auto& r : s.records) {
        if (r.status == RecordStatus::Certified)
            out += r.key + "\n" + r.tree + "\n";
        else if (r.status == RecordStatus::Unknown)
            out += r.key + "\nunknown\n";
    }
    return out;
}

std::string format_summary(const BatchSummary& s) {
    struct Row {
        int total = 0, certified = 0, unknown = 0, failed = 0, reduced = 0;
        double seconds = 0;
    };
    std::map<int, Row> rows;
    for (const auto& r : s.records) {
        if (r.status == RecordStatus::Skipped) continue;
        auto& row = rows[r.n];
        ++row.total;
        row.certified += r.status == RecordStatus::Certified;
        row.unknown += r.status == RecordStatus::Unknown;
        row.failed += r.status == RecordStatus::Failed;
        row.reduced += r.reductions > 0;
        row.seconds += r.seconds;
    }
    std::ostringstream out;
    char buf[160];
    out << "mode " << (s.mode == BatchMode::Solve ? "solve" : "reduce") << "\n";
    out << "   n    graphs  certified   unknown    failed   reduced   seconds\n";
    for (const auto& [n, row] : rows) {
        std::snprintf(buf, sizeof buf, "%4d %9d %10d %9d %9d %9d %9.3f\n", n, row.total, row.certified, row.unknown,
                      row.failed, row.reduced, row.seconds);
        out << buf;
    }
    out << "records " << s.records.size() << ", certified " << s.count(RecordStatus::Certified) << ", unknown "
        << s.count(RecordStatus::Unknown) << ", failed " << s.count(RecordStatus::Failed) << ", skipped "
        << s.count(RecordStatus::Skipped) << "\n";
    for (const auto& r : s.records)
        if (r.status != RecordStatus::Certified)
            out << (r.status == RecordStatus::Unknown ? "unknown" : r.status == RecordStatus::Failed ? "failed" : "skipped")
                << " line " << r.line << " " << r.key << ": " << r.diagnostic << "\n";
    std::snprintf(buf, sizeof buf, "wall %.3f s\n", s.seconds);
    out << buf;
    return out.str();
}

std::string normalise_graph6(const std::string& text) { return write_graph6(parse_graph6(text)); }

std::map<std::string, std::string> read_certificates(std::istream& in) {
    std::map<std::string, std::string> out;
    auto recs = read_corpus(in);
    if (recs.size() % 2) throw std::invalid_argument("certificate file has an odd number of lines");
    for (size_t i = 0; i < recs.size(); i += 2) {
        std::string key;
        try {
            key = normalise_graph6(recs[i].text);
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(recs[i].line) + ": " + e.what());
        }
        out[key] = recs[i + 1].text;
    }
    return out;
}

std::vector<CertCheck> check_certificates(const std::vector<CorpusRecord>& corpus,
                                          const std::map<std::string, std::string>& certs) {
    std::vector<CertCheck> out;
    for (const auto& rec : corpus) {
        CertCheck c;
        c.line = rec.line;
        c.key = rec.text;
        Graph g;
        try {
            g = parse_graph6(rec.text);
            c.key = write_graph6(g);
        } catch (const std::exception& e) {
            c.diagnostic = std::string("parse error: ") + e.what();
            out.push_back(c);
            continue;
        }
        auto it = certs.find(c.key);
        if (it == certs.end()) {
            c.diagnostic = "missing certificate";
        } else if (it->second == "unknown") {
            c.diagnostic = "certificate marked unknown";
        } else {
            try {
                ThreeDecomposition d;
                auto v = decomposition_from_tree(g, parse_tree_line(it->second), d);
                c.ok = v.ok;
                c.diagnostic = v.diagnostic;
            } catch (const std::exception& e) {
                c.diagnostic = e.what();
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace cubic3dec
