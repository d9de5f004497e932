#include "berge_forge/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace berge {

TripleSystem triangle_hypergraph(const Graph& g) {
    return TripleSystem(g.n(), triangle_list(g));
}

TripleSystem double_one_side(const BipartiteGraph& b) {
    const int m = b.left_size();
    const int n = b.right_size();
    std::vector<Triple> triples;
    triples.reserve(b.edge_count());
    for (auto [a, j] : b.edges()) triples.push_back({a, m + j, m + n + j});
    return TripleSystem(m + 2 * n, triples);
}

Graph blowup_c5(int n) {
    if (n <= 0 || n % 5 != 0) {
        throw std::invalid_argument("blowup_c5: n = " + std::to_string(n) + " is not a positive multiple of 5");
    }
    const int part = n / 5;
    Graph g(n);
    for (int c = 0; c < 5; ++c) {
        const int d = (c + 1) % 5;
        for (int i = 0; i < part; ++i) {
            for (int j = 0; j < part; ++j) g.add_edge(c * part + i, d * part + j);
        }
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

BipartiteGraph bipartite_cycle(int half) {
    if (half < 2) throw std::invalid_argument("bipartite_cycle: need at least 2 vertices per side");
    // Cycle l0 r0 l1 r1 ... l_{h-1} r_{h-1} l0.
    BipartiteGraph b(half, half);
    for (int i = 0; i < half; ++i) {
        b.add_edge(i, i);
        b.add_edge((i + 1) % half, i);
    }
    return b;
}

}  // namespace berge
