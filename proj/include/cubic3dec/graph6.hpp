#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubic3dec/graph.hpp"

namespace cubic3dec {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

struct CorpusRecord {
    int line = 0;
    std::string text;
};

// Reads non-empty lines, dropping an optional ">>graph6<<" header and CR.
std::vector<CorpusRecord> read_corpus(std::istream& in);

}  // namespace cubic3dec
