#include "berge_forge/decompose.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "berge_forge/detect.hpp"
#include "berge_forge/errors.hpp"

namespace berge {

namespace {

Vertex third_vertex(const Triple& t, const Edge& pair) {
    for (auto x : t) {
        if (x != pair.first && x != pair.second) return x;
    }
    throw std::logic_error("third_vertex: pair not inside triple");
}

std::array<Edge, 3> pairs_of(const Triple& t) {
    return {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}};
}

// 8 * P(private pair monochromatic, third vertex opposite) under uniform
// completion of the unassigned vertices (colour 0).
int h3_weight(const std::vector<int>& color, Vertex a, Vertex b, Vertex c) {
    int successes = 0;
    int completions = 0;
    for (int ca = 1; ca <= 2; ++ca) {
        if (color[a] != 0 && color[a] != ca) continue;
        for (int cb = 1; cb <= 2; ++cb) {
            if (color[b] != 0 && color[b] != cb) continue;
            for (int cc = 1; cc <= 2; ++cc) {
                if (color[c] != 0 && color[c] != cc) continue;
                ++completions;
                if (ca == cb && cc != ca) ++successes;
            }
        }
    }
    return successes * 8 / completions;
}

std::int64_t falling(std::int64_t x, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= x - i;
    return r;
}

}  // namespace

Graph build_g2(const TripleSystem& h) {
    Graph g(h.n());
    for (const auto& [pair, mult] : shadow_pairs(h).entries()) {
        if (mult >= 2) g.add_edge(pair.first, pair.second);
    }
    return g;
}

PrivatePairSplit split_h1_h2(const TripleSystem& h) {
    const auto deg = shadow_pairs(h);
    PrivatePairSplit split;
    for (std::size_t i = 0; i < h.size(); ++i) {
        bool found = false;
        for (const auto& p : pairs_of(h[i])) {  // already lexicographic
            if (deg.get(p.first, p.second) == 1) {
                split.h1.push_back(i);
                split.private_pair.emplace(i, p);
                found = true;
                break;
            }
        }
        if (!found) split.h2.push_back(i);
    }
    return split;
}

TwoColoring two_color_h3(const TripleSystem& h, const PrivatePairSplit& split) {
    struct Item {
        Vertex a, b, c;
    };
    std::vector<Item> items;
    std::vector<std::vector<std::size_t>> touching(h.n());
    for (auto e : split.h1) {
        const auto& p = split.private_pair.at(e);
        items.push_back({p.first, p.second, third_vertex(h[e], p)});
        for (auto v : {p.first, p.second, items.back().c}) touching[v].push_back(items.size() - 1);
    }

    TwoColoring out;
    out.color.assign(h.n(), 0);
    for (Vertex v = 0; v < h.n(); ++v) {
        // Only the terms of edges through v depend on v's colour.
        long long best_score = -1;
        int best_color = 1;
        for (int c = 1; c <= 2; ++c) {
            out.color[v] = c;
            long long score = 0;
            for (auto idx : touching[v]) score += h3_weight(out.color, items[idx].a, items[idx].b, items[idx].c);
            if (score > best_score) {
                best_score = score;
                best_color = c;
            }
        }
        out.color[v] = best_color;
    }

    for (std::size_t k = 0; k < split.h1.size(); ++k) {
        const auto& it = items[k];
        if (out.color[it.a] == out.color[it.b] && out.color[it.c] != out.color[it.a]) out.h3.push_back(split.h1[k]);
    }
    if (4 * out.h3.size() < split.h1.size()) {
        throw GuaranteeViolation("two_color_h3: |h3| = " + std::to_string(out.h3.size()) + " < |h1|/4 with |h1| = " +
                                 std::to_string(split.h1.size()));
    }
    return out;
}

std::pair<EdgeIndices, EdgeIndices> split_h4_h5(const TripleSystem& h, const EdgeIndices& h3,
                                                 const std::map<std::size_t, Edge>& private_pair) {
    const auto deg = shadow_pairs(h);
    EdgeIndices h4;
    EdgeIndices h5;
    for (auto e : h3) {
        const auto& p = private_pair.at(e);
        const Vertex w = third_vertex(h[e], p);
        if (std::max(deg.get(w, p.first), deg.get(w, p.second)) >= 3) h4.push_back(e);
        else h5.push_back(e);
    }
    return {h4, h5};
}

Graph g4_graph(const TripleSystem& h, const EdgeIndices& h4, const std::map<std::size_t, Edge>& private_pair) {
    Graph g(h.n());
    for (auto e : h4) {
        const auto& p = private_pair.at(e);
        g.add_edge(p.first, p.second);
    }
    return g;
}

EdgeIndices greedy_linear(const TripleSystem& h, const EdgeIndices& h5,
                          const std::map<std::size_t, Edge>& private_pair) {
    const auto deg = shadow_pairs(h);
    for (auto e : h5) {
        auto it = private_pair.find(e);
        if (it == private_pair.end() || deg.get(it->second.first, it->second.second) != 1) {
            throw PreconditionError("greedy_linear: edge " + std::to_string(e) + " has no private pair");
        }
        for (const auto& p : pairs_of(h[e])) {
            if (deg.get(p.first, p.second) > 2) {
                throw PreconditionError("greedy_linear: edge " + std::to_string(e) +
                                        " has a pair of multiplicity above 2");
            }
        }
    }

    auto order = h5;
    std::sort(order.begin(), order.end());
    std::set<std::uint64_t> covered;
    EdgeIndices h6;
    for (auto e : order) {
        const auto ps = pairs_of(h[e]);
        bool clash = std::any_of(ps.begin(), ps.end(), [&](const Edge& p) {
            return covered.count(PairDegreeMap::key(p.first, p.second)) != 0;
        });
        if (clash) continue;
        h6.push_back(e);
        for (const auto& p : ps) covered.insert(PairDegreeMap::key(p.first, p.second));
    }
    if (3 * h6.size() < h5.size()) {
        throw GuaranteeViolation("greedy_linear: |h6| = " + std::to_string(h6.size()) + " < |h5|/3 with |h5| = " +
                                 std::to_string(h5.size()));
    }
    return h6;
}

Decomposition decompose(const TripleSystem& h) {
    Decomposition d;
    d.source = h;
    d.g2 = build_g2(h);
    auto split = split_h1_h2(h);
    auto coloring = two_color_h3(h, split);
    auto [h4, h5] = split_h4_h5(h, coloring.h3, split.private_pair);
    d.h6 = greedy_linear(h, h5, split.private_pair);
    d.g4 = g4_graph(h, h4, split.private_pair);
    d.h1 = std::move(split.h1);
    d.h2 = std::move(split.h2);
    d.private_pair = std::move(split.private_pair);
    d.coloring = std::move(coloring.color);
    d.h3 = std::move(coloring.h3);
    d.h4 = std::move(h4);
    d.h5 = std::move(h5);
    return d;
}

Tripartition rainbow_tripartition(const Graph& g) {
    const int n = g.n();
    if (n < 3) throw PreconditionError("rainbow_tripartition: need at least 3 vertices");
    const auto triangles = triangle_list(g);
    std::array<std::int64_t, 4> remaining{0, n / 3, (n + 1) / 3, (n + 2) / 3};
    Tripartition out;
    out.classes.assign(n, 0);
    out.triangles = triangles.size();

    for (Vertex v = 0; v < n; ++v) {
        const std::int64_t left = n - v - 1;  // unassigned after v
        const int depth = static_cast<int>(std::min<std::int64_t>(3, left));
        const std::int64_t denom = falling(left, depth);
        std::int64_t best_score = -1;
        int best_class = 0;
        for (int c = 1; c <= 3; ++c) {
            if (remaining[c] == 0) continue;
            out.classes[v] = c;
            --remaining[c];
            // Capacities are shared, so every triangle's conditional probability moves with v.
            std::int64_t score = 0;
            for (const auto& tri : triangles) {
                std::array<int, 4> seen{};
                int free = 0;
                bool clash = false;
                for (auto x : tri) {
                    const int k = out.classes[x];
                    if (k == 0) ++free;
                    else if (seen[k]++) clash = true;
                }
                if (clash) continue;
                std::int64_t ways = free == 2 ? 2 : (free == 3 ? 6 : 1);
                for (int k = 1; k <= 3; ++k) {
                    if (!seen[k]) ways *= remaining[k];
                }
                score += ways * (denom / falling(left, free));
            }
            ++remaining[c];
            if (score > best_score) {
                best_score = score;
                best_class = c;
            }
        }
        out.classes[v] = best_class;
        --remaining[best_class];
    }

    for (const auto& t : triangles) {
        if (out.classes[t[0]] != out.classes[t[1]] && out.classes[t[1]] != out.classes[t[2]] &&
            out.classes[t[0]] != out.classes[t[2]]) {
            ++out.rainbow_count;
        }
    }
    if (9 * out.rainbow_count < 2 * out.triangles) {
        throw GuaranteeViolation("rainbow_tripartition: " + std::to_string(out.rainbow_count) +
                                 " rainbow triangles is below 2/9 of " + std::to_string(out.triangles));
    }
    return out;
}

bool check_triangle_lemma(const Graph& g, int cycle_length) {
    if (find_cycle(g, cycle_length)) {
        throw PreconditionError("check_triangle_lemma: graph contains C_" + std::to_string(cycle_length));
    }
    const auto t = static_cast<long long>(triangle_count(g));
    const auto e = static_cast<long long>(g.edge_count());
    return 3 * t <= (cycle_length - 3) * e;
}

}  // namespace berge
