#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "berge_forge/core.hpp"

namespace berge {

using EdgeIndices = std::vector<std::size_t>;

/// Edges with a private pair (h1) versus edges whose three pairs are all
/// covered at least twice (h2).
struct PrivatePairSplit {
    EdgeIndices h1;
    EdgeIndices h2;
    /// Defined on h1: lexicographically least multiplicity-1 pair of the edge.
    std::map<std::size_t, Edge> private_pair;
};

struct TwoColoring {
    std::vector<int> color;  // per vertex, 1 or 2
    EdgeIndices h3;
};

struct Decomposition {
    TripleSystem source;
    Graph g2;
    EdgeIndices h1;
    EdgeIndices h2;
    std::map<std::size_t, Edge> private_pair;
    std::vector<int> coloring;
    EdgeIndices h3;
    EdgeIndices h4;
    EdgeIndices h5;
    EdgeIndices h6;
    Graph g4;
};

struct Tripartition {
    std::vector<int> classes;  // per vertex, 1..3
    std::size_t rainbow_count = 0;
    std::size_t triangles = 0;
};

/// Pairs covered by at least two edges.
Graph build_g2(const TripleSystem& h);

PrivatePairSplit split_h1_h2(const TripleSystem& h);

/**
 * Two-colouring by conditional expectations. An h1 edge lands in h3 when its
 * private pair is monochromatic and the third vertex has the other colour.
 * Guarantees |h3| >= ceil(|h1| / 4); throws GuaranteeViolation otherwise.
 */
TwoColoring two_color_h3(const TripleSystem& h, const PrivatePairSplit& split);

/// h4: edges {u,v,w} of h3 (private pair uv) with max(deg(w,u), deg(w,v)) >= 3
/// in the full system; h5 is the rest of h3.
std::pair<EdgeIndices, EdgeIndices> split_h4_h5(const TripleSystem& h, const EdgeIndices& h3,
                                                 const std::map<std::size_t, Edge>& private_pair);

Graph g4_graph(const TripleSystem& h, const EdgeIndices& h4, const std::map<std::size_t, Edge>& private_pair);

/**
 * Greedy linear subfamily of h5 in ascending edge order. Requires every h5
 * edge to have its private pair at multiplicity 1 and its other pairs at
 * multiplicity <= 2 (PreconditionError otherwise). Guarantees
 * |h6| >= ceil(|h5| / 3).
 */
EdgeIndices greedy_linear(const TripleSystem& h, const EdgeIndices& h5,
                          const std::map<std::size_t, Edge>& private_pair);

/// Runs the whole pipeline.
Decomposition decompose(const TripleSystem& h);

/**
 * Balanced 3-partition (class i has floor((n+i-1)/3) vertices) built by
 * conditional expectations over uniformly random balanced partitions.
 * Guarantees rainbow_count >= 2/9 t(G); throws GuaranteeViolation otherwise.
 */
Tripartition rainbow_tripartition(const Graph& g);

/// t(G) <= (l-3) e(G) / 3 for a C_l-free graph; PreconditionError if G contains C_l.
bool check_triangle_lemma(const Graph& g, int cycle_length);

}  // namespace berge
