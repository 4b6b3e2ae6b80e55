#include "cubic3dec/named.hpp"

namespace cubic3dec::named {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k33() {
    std::vector<Edge> es;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
    return Graph(6, es);
}

Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph cube() {
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 1; b < 8; b <<= 1)
            if (v < (v ^ b)) es.emplace_back(v, v ^ b);
    return Graph(8, es);
}

}  // namespace cubic3dec::named
