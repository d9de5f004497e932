#pragma once

#include "berge_forge/core.hpp"

namespace berge {

/// Triple system whose edges are the triangles of g.
TripleSystem triangle_hypergraph(const Graph& g);

/**
 * Doubles every right-part vertex of b. Left vertex a keeps index a, right
 * vertex j becomes m + j and its clone m + n + j; edge (a, j) becomes the
 * triple {a, m + j, m + n + j}.
 */
TripleSystem double_one_side(const BipartiteGraph& b);

/// Balanced blow-up of C5 on n vertices (5 | n). Class c holds c*n/5 .. (c+1)*n/5 - 1.
Graph blowup_c5(int n);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
BipartiteGraph bipartite_cycle(int half);  // C_{2*half} split into its two colour classes

}  // namespace berge
