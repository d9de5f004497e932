#pragma once

#include <cstdint>
#include <random>

#include "berge_forge/core.hpp"

namespace berge {

/// G(n, p) with p given as a percentage.
Graph random_graph(int n, int edge_percent, std::mt19937_64& rng);

/// Each of the C(n,3) triples is kept independently with probability percent/100.
TripleSystem random_triples(int n, int edge_percent, std::mt19937_64& rng);

/// `count` distinct triples chosen uniformly (count is capped at C(n,3)).
TripleSystem random_triples_count(int n, int count, std::mt19937_64& rng);

/// Random graph with no cycle of the given length, grown by adding random
/// pairs that keep it C_l-free (at most `attempts` tries).
Graph random_cycle_free_graph(int n, int length, int attempts, std::mt19937_64& rng);

}  // namespace berge
