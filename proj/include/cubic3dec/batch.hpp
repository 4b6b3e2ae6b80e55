#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "cubic3dec/graph6.hpp"

namespace cubic3dec {

enum class BatchMode { Solve, Reduce };

struct BatchOptions {
    BatchMode mode = BatchMode::Solve;
    int jobs = 1;
    std::uint64_t budget = 0;
};

enum class RecordStatus { Certified, Unknown, Skipped, Failed };

struct RecordOutcome {
    int line = 0;
    std::string key;  // normalised graph6
    int n = 0;
    RecordStatus status = RecordStatus::Skipped;
    std::string tree;        // tree line when certified
    std::string diagnostic;  // skip reason or failure
    int reductions = 0;
    double seconds = 0;
};

struct BatchSummary {
    BatchMode mode = BatchMode::Solve;
    std::vector<RecordOutcome> records;  // input order
    double seconds = 0;
    int count(RecordStatus s) const;
};

// Records are processed independently on `jobs` threads; results keep input order.
BatchSummary run_batch(const std::vector<CorpusRecord>& corpus, const BatchOptions& opt);

// Certified records as "graph6\ntree\n", Unknown ones with "unknown" as the tree line.
std::string certificates_text(const BatchSummary& s);
// Counts per order, Unknown list, skipped and failed records, timing.
std::string format_summary(const BatchSummary& s);

struct CertCheck {
    int line = 0;
    std::string key;
    bool ok = false;
    std::string diagnostic;
};

// graph6 key -> tree line; keys normalised through parse/write.
std::map<std::string, std::string> read_certificates(std::istream& in);
std::vector<CertCheck> check_certificates(const std::vector<CorpusRecord>& corpus,
                                          const std::map<std::string, std::string>& certs);
std::string normalise_graph6(const std::string& text);

}  // namespace cubic3dec
