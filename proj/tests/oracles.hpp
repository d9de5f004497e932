#pragma once

// Brute-force reference implementations used to check the library. They
// share nothing with the library except the Graph / TripleSystem containers
// and deliberately use the dumbest correct algorithm.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "berge_forge/core.hpp"

namespace oracle {

using berge::Graph;
using berge::Triple;
using berge::TripleSystem;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

/// Calls f on every sequence of k distinct vertices out of n.
template <class F>
void for_each_arrangement(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> seq;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == k) {
            f(seq);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            seq.push_back(v);
            self(self);
            seq.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
}

/// Number of cycles of the given length; every closed walk on distinct
/// vertices is counted once per rotation and direction, hence / (2 * len).
inline long long cycles_by_walks(const Graph& g, int len) {
    const auto a = adjacency(g);
    long long walks = 0;
    for_each_arrangement(g.n(), len, [&](const std::vector<int>& s) {
        for (int i = 0; i < len; ++i) {
            if (!a[s[i]][s[(i + 1) % len]]) return;
        }
        ++walks;
    });
    return walks / (2 * len);
}

inline bool has_cycle(const Graph& g, int len) { return cycles_by_walks(g, len) > 0; }

inline bool has_path(const Graph& g, int vertices) {
    if (vertices == 1) return g.n() >= 1;
    const auto a = adjacency(g);
    bool found = false;
    for_each_arrangement(g.n(), vertices, [&](const std::vector<int>& s) {
        if (found) return;
        for (int i = 0; i + 1 < vertices; ++i) {
            if (!a[s[i]][s[i + 1]]) return;
        }
        found = true;
    });
    return found;
}

/// Cycle of length >= len with a chord.
inline bool has_theta(const Graph& g, int len) {
    const auto a = adjacency(g);
    for (int l = len; l <= g.n(); ++l) {
        bool found = false;
        for_each_arrangement(g.n(), l, [&](const std::vector<int>& s) {
            if (found) return;
            for (int i = 0; i < l; ++i) {
                if (!a[s[i]][s[(i + 1) % l]]) return;
            }
            for (int i = 0; i < l; ++i) {
                for (int j = i + 2; j < l; ++j) {
                    if (i == 0 && j == l - 1) continue;
                    if (a[s[i]][s[j]]) found = true;
                }
            }
        });
        if (found) return true;
    }
    return false;
}

inline long long count_triangles(const Graph& g) { return cycles_by_walks(g, 3); }

inline bool contains(const Triple& t, int v) { return t[0] == v || t[1] == v || t[2] == v; }

/// Berge cycle of length len: core sequence plus an injective choice of
/// hyperedges, found by trying every core arrangement and every assignment.
inline bool has_berge_cycle(const TripleSystem& h, int len) {
    const auto& e = h.edges();
    bool found = false;
    for_each_arrangement(h.n(), len, [&](const std::vector<int>& core) {
        if (found) return;
        std::vector<bool> used(e.size(), false);
        auto assign = [&](auto&& self, int i) -> bool {
            if (i == len) return true;
            const int u = core[i];
            const int v = core[(i + 1) % len];
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (used[j] || !contains(e[j], u) || !contains(e[j], v)) continue;
                used[j] = true;
                if (self(self, i + 1)) return true;
                used[j] = false;
            }
            return false;
        };
        found = assign(assign, 0);
    });
    return found;
}

inline bool linear_by_pairs(const TripleSystem& h) {
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            int shared = 0;
            for (int v : e[i]) shared += contains(e[j], v) ? 1 : 0;
            if (shared > 1) return false;
        }
    }
    return true;
}

inline int pair_degree(const TripleSystem& h, int u, int v) {
    int d = 0;
    for (const auto& t : h.edges()) d += (contains(t, u) && contains(t, v)) ? 1 : 0;
    return d;
}

/// Maximum edge count over all graphs on n vertices accepted by `ok`.
template <class Ok>
long long max_graph_edges(int n, Ok&& ok) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        const int bits = __builtin_popcountll(mask);
        if (bits <= best) continue;
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        }
        if (ok(g)) best = bits;
    }
    return best;
}

/// Maximum triangle count over all graphs on n vertices accepted by `ok`.
template <class Ok>
long long max_graph_triangles(int n, Ok&& ok) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        }
        if (ok(g)) best = std::max(best, count_triangles(g));
    }
    return best;
}

/// Maximum edge count over all triple systems on n vertices accepted by `ok`.
template <class Ok>
long long max_triple_edges(int n, Ok&& ok) {
    std::vector<Triple> slots;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) slots.push_back({a, b, c});
        }
    }
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        const int bits = __builtin_popcountll(mask);
        if (bits <= best) continue;
        std::vector<Triple> chosen;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1) chosen.push_back(slots[i]);
        }
        const TripleSystem h(n, chosen);
        if (ok(h)) best = bits;
    }
    return best;
}

}  // namespace oracle
