#include "cubic3dec/graph6.hpp"

namespace cubic3dec {

namespace {

int sixbits(std::string_view s, size_t i) {
    if (i >= s.size()) throw Graph6Error("truncated record", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("character out of range", i);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
    if (s.empty()) throw Graph6Error("empty record", 0);
    size_t pos = 0;
    long n = sixbits(s, 0);
    pos = 1;
    if (n == 63) {
        if (s.size() > 1 && s[1] == '~') throw Graph6Error("graphs beyond 258047 vertices unsupported", 1);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | sixbits(s, pos++);
        if (n < 63) throw Graph6Error("non-canonical size header", 1);
    }
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (s.size() < pos + nbytes) throw Graph6Error("truncated bit stream", s.size());
    if (s.size() > pos + nbytes) throw Graph6Error("trailing data", pos + nbytes);
    std::vector<Edge> edges;
    size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sixbits(s, pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (nbits % 6) {
        int last = sixbits(s, pos + nbytes - 1);
        if (last & ((1 << (6 - nbits % 6)) - 1)) throw Graph6Error("nonzero padding bits", pos + nbytes - 1);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    }
    int acc = 0, cnt = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++cnt == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = cnt = 0;
            }
        }
    if (cnt) out.push_back(static_cast<char>((acc << (6 - cnt)) + 63));
    return out;
}

std::vector<CorpusRecord> read_corpus(std::istream& in) {
    std::vector<CorpusRecord> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back({no, line});
    }
    return out;
}

}  // namespace cubic3dec
