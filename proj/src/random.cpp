#include "berge_forge/random.hpp"

#include <algorithm>

#include "berge_forge/detect.hpp"

namespace berge {

Graph random_graph(int n, int edge_percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
        }
    }
    return g;
}

TripleSystem random_triples(int n, int edge_percent, std::mt19937_64& rng) {
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (static_cast<int>(rng() % 100) < edge_percent) edges.push_back({a, b, c});
            }
        }
    }
    return TripleSystem(n, edges);
}

TripleSystem random_triples_count(int n, int count, std::mt19937_64& rng) {
    std::vector<Triple> all;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
        }
    }
    const auto take = std::min(all.size(), static_cast<std::size_t>(std::max(count, 0)));
    for (std::size_t i = 0; i < take; ++i) {
        const auto j = i + rng() % (all.size() - i);
        std::swap(all[i], all[j]);
    }
    all.resize(take);
    return TripleSystem(n, all);
}

Graph random_cycle_free_graph(int n, int length, int attempts, std::mt19937_64& rng) {
    Graph g(n);
    if (n < 2) return g;
    for (int i = 0; i < attempts; ++i) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || g.has_edge(u, v)) continue;
        if (!detail::has_path_with_edges(g, u, v, length - 1)) g.add_edge(u, v);
    }
    return g;
}

}  // namespace berge
