#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubic3dec/batch.hpp"
#include "cubic3dec/decomp.hpp"
#include "cubic3dec/extend.hpp"
#include "cubic3dec/generate.hpp"
#include "cubic3dec/graph6.hpp"
#include "cubic3dec/hist.hpp"
#include "cubic3dec/reduce.hpp"
#include "cubic3dec/sat_gadget.hpp"

using namespace cubic3dec;

namespace {

enum Exit { Ok = 0, VerifyFail = 1, InputError = 2, UnknownPresent = 3 };

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<CorpusRecord> load_corpus(const std::string& path) {
    if (path == "-") return read_corpus(std::cin);
    std::ifstream in(path);
    if (!in) throw InputFailure("cannot open " + path);
    return read_corpus(in);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFailure("cannot open " + path);
    return in;
}

// writes to --out when given, stdout otherwise
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputFailure("cannot write " + out_path);
    out << text;
}

Graph parse_arg(const std::string& text) {
    try {
        return parse_graph6(text);
    } catch (const Graph6Error& e) {
        throw InputFailure(std::string("graph6: ") + e.what());
    }
}

void require_cubic_connected(const Graph& g) {
    if (!g.is_cubic()) throw InputFailure("graph is not cubic");
    if (!is_connected(g)) throw InputFailure("graph is not connected");
}

SolveOptions options(std::uint64_t budget) {
    auto o = default_solve_options();
    o.budget = budget;
    return o;
}

int cmd_solve(const std::vector<std::string>& graphs, std::uint64_t budget, const std::string& out) {
    std::string text;
    int rc = Ok;
    for (const auto& s : graphs) {
        Graph g = parse_arg(s);
        require_cubic_connected(g);
        auto r = solve(g, options(budget));
        if (r.status == SolveStatus::Found) {
            if (!verify(g, r.decomposition)) return VerifyFail;
            text += write_certificate(g, r.decomposition);
        } else {
            text += write_graph6(g) + "\nunknown\n";
            rc = r.status == SolveStatus::Unknown ? UnknownPresent : VerifyFail;
        }
    }
    emit(out, text);
    return rc;
}

int cmd_batch(const std::string& corpus, const std::string& mode, int jobs, std::uint64_t budget,
              const std::string& out) {
    BatchOptions opt;
    opt.mode = mode == "reduce" ? BatchMode::Reduce : BatchMode::Solve;
    opt.jobs = jobs;
    opt.budget = budget;
    auto s = run_batch(load_corpus(corpus), opt);
    emit(out, certificates_text(s));
    std::cerr << format_summary(s);
    if (s.count(RecordStatus::Failed)) return VerifyFail;
    if (s.count(RecordStatus::Unknown)) return UnknownPresent;
    return Ok;
}

int cmd_check(const std::string& corpus, const std::string& certs) {
    auto records = load_corpus(corpus);
    auto in = open_in(certs);
    std::map<std::string, std::string> table;
    try {
        table = read_certificates(in);
    } catch (const std::invalid_argument& e) {
        throw InputFailure(e.what());
    }
    int failed = 0;
    for (const auto& c : check_certificates(records, table)) {
        std::cout << (c.ok ? "pass" : "FAIL") << " line " << c.line << " " << c.key;
        if (!c.ok) std::cout << ": " << c.diagnostic;
        std::cout << "\n";
        failed += !c.ok;
    }
    std::cout << "checked " << records.size() << ", failed " << failed << "\n";
    return failed ? VerifyFail : Ok;
}

int cmd_reduce(const std::string& g6, std::uint64_t budget, bool properties) {
    Graph g = parse_arg(g6);
    require_cubic_connected(g);
    if (!is_three_connected(g)) throw InputFailure("graph is not 3-connected");
    auto r = solve_via_reduction(g, options(budget));
    std::cout << format_trace(r);
    if (properties) {
        auto p = check_min_counterexample_properties(g);
        std::cout << "girth>=4 " << p.girth_ok << "\nshort cycles induced " << p.short_cycles_induced
                  << "\nevery edge centres an induced P6 " << p.p6_centres << "\nconfigurations";
        for (const auto& c : p.configurations) std::cout << " " << c;
        std::cout << "\n";
    }
    if (r.status == SolveStatus::Unknown) return UnknownPresent;
    if (r.status != SolveStatus::Found) return VerifyFail;
    std::cout << "certificate\n" << write_certificate(g, r.decomposition);
    return Ok;
}

int cmd_compat(const std::string& pair, bool list, bool show) {
    if (list) {
        for (const auto& p : builtin_pairs()) std::cout << p.name << "\n";
        return Ok;
    }
    const TransformationPair* p = nullptr;
    try {
        p = &find_pair(pair);
    } catch (const std::invalid_argument& e) {
        throw InputFailure(e.what());
    }
    if (show) std::cout << serialize_pair(*p);
    std::cout << format_report(compatibility(*p));
    return Ok;
}

int cmd_sat(const std::string& path, std::uint64_t budget, bool hardness) {
    Cnf f;
    try {
        if (path == "-") {
            f = parse_dimacs(std::cin);
        } else {
            auto in = open_in(path);
            f = parse_dimacs(in);
        }
        check_3cnf(f);
    } catch (const CnfError& e) {
        throw InputFailure(std::string("dimacs: ") + e.what());
    }
    auto g = sat_to_template(f);
    auto r = realize(g, budget);
    std::cout << format_gadget_report(g, r);
    if (hardness) {
        auto h = naive_hardness_instance(g);
        std::cout << "hardness template: " << h.x.core_size << " inner, forest " << h.forest.str() << "\n";
        std::cout << "naively extendable: " << (is_naively_extendable(h.forest, g.y) ? "yes" : "no") << "\n";
    }
    if (r.realizable && !satisfies(g.formula, r.value)) return VerifyFail;
    return r.status == SearchStatus::Budget ? UnknownPresent : Ok;
}

int cmd_hist(const std::string& certs) {
    auto in = open_in(certs);
    auto recs = read_corpus(in);
    if (recs.size() % 2) throw InputFailure("certificate file has an odd number of lines");
    int failed = 0;
    for (size_t i = 0; i < recs.size(); i += 2) {
        Graph g = parse_arg(recs[i].text);
        ThreeDecomposition d;
        VerifyResult v;
        try {
            v = decomposition_from_tree(g, parse_tree_line(recs[i + 1].text), d);
        } catch (const std::invalid_argument& e) {
            v = {false, e.what()};
        }
        std::cout << "graph " << write_graph6(g) << "\n";
        if (!v) {
            std::cout << "invalid certificate: " << v.diagnostic << "\n";
            ++failed;
            continue;
        }
        auto h = hist_reduce(g, d);
        for (const auto& st : h.steps) std::cout << "  " << step_str(st) << "\n";
        auto tree = h.terminal.tree();
        bool hist = is_hist(h.terminal.graph, tree);
        std::cout << "terminal " << write_graph6(h.terminal.graph) << " " << tree_line(tree) << " "
                  << (hist ? "HIST" : "not HIST") << "\n";
        failed += !hist;
    }
    return failed ? VerifyFail : Ok;
}

int cmd_generate(int n, const std::string& out) {
    if (n < 4 || n % 2 || n > 20) throw InputFailure("order must be even and in 4..20");
    std::string text;
    for (const auto& g : connected_cubic_graphs(n)) text += write_graph6(g) + "\n";
    emit(out, text);
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-decompositions of cubic graphs"};
    app.require_subcommand(1);
    int jobs = 1;
    std::uint64_t budget = 0;
    std::string out;

    std::vector<std::string> graphs;
    auto* solve_c = app.add_subcommand("solve", "certify graph6 strings");
    solve_c->add_option("graphs", graphs, "graph6 strings")->required();
    solve_c->add_option("--budget", budget, "search node budget (0 = none)");
    solve_c->add_option("--out", out, "certificate file");

    std::string corpus, mode = "solve", certs;
    auto* batch_c = app.add_subcommand("batch", "certify every record of a graph6 corpus");
    batch_c->add_option("corpus", corpus, "graph6 file, - for stdin")->required();
    batch_c->add_option("--mode", mode, "solve or reduce")->check(CLI::IsMember({"solve", "reduce"}));
    batch_c->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    batch_c->add_option("--budget", budget, "search node budget per graph (0 = none)");
    batch_c->add_option("--out", out, "certificate file");

    auto* check_c = app.add_subcommand("check", "verify certificates against a corpus");
    check_c->add_option("corpus", corpus, "graph6 file")->required();
    check_c->add_option("certs", certs, "certificate file")->required();

    std::string g6;
    bool properties = false;
    auto* reduce_c = app.add_subcommand("reduce", "solve one graph through configuration reductions");
    reduce_c->add_option("graph", g6, "graph6 string")->required();
    reduce_c->add_option("--budget", budget, "base solver budget");
    reduce_c->add_flag("--properties", properties, "report the minimum counterexample properties");

    std::string pair;
    bool list = false, show = false;
    auto* compat_c = app.add_subcommand("compat", "compatibility report of a transformation pair");
    compat_c->add_option("pair", pair, "pair name such as node-triangle");
    compat_c->add_flag("--list", list, "list the pair names");
    compat_c->add_flag("--show-pair", show, "print the pair's templates first");

    std::string dimacs;
    bool hardness = false;
    auto* sat_c = app.add_subcommand("sat-gadget", "build and solve the gadget of a 3CNF formula");
    sat_c->add_option("dimacs", dimacs, "DIMACS file, - for stdin")->required();
    sat_c->add_option("--budget", budget, "search node budget");
    sat_c->add_flag("--hardness", hardness, "also build the naive-extendability instance");

    auto* hist_c = app.add_subcommand("hist-reduce", "reduce certified graphs to a HIST terminal");
    hist_c->add_option("certs", certs, "certificate file")->required();

    int order = 0;
    auto* gen_c = app.add_subcommand("generate", "all connected cubic graphs of one order");
    gen_c->add_option("n", order, "order")->required();
    gen_c->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : InputError;
    }

    try {
        if (*solve_c) return cmd_solve(graphs, budget, out);
        if (*batch_c) return cmd_batch(corpus, mode, jobs, budget, out);
        if (*check_c) return cmd_check(corpus, certs);
        if (*reduce_c) return cmd_reduce(g6, budget, properties);
        if (*compat_c) {
            if (!list && pair.empty()) throw InputFailure("pair name required");
            return cmd_compat(pair, list, show);
        }
        if (*sat_c) return cmd_sat(dimacs, budget, hardness);
        if (*hist_c) return cmd_hist(certs);
        if (*gen_c) return cmd_generate(order, out);
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return VerifyFail;
    }
    return Ok;
}
