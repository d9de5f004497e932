#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "berge_forge/core.hpp"
#include "berge_forge/detect.hpp"

namespace berge {

enum class Universe { Graph, Bipartite, Triples };
enum class Objective { Edges, Triangles };

/// Zero means unlimited.
struct Budget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
};

struct SearchProblem {
    Universe universe = Universe::Graph;
    int n = 0;  // vertex count; right part size for bipartite
    int m = 0;  // left part size (bipartite only)
    std::vector<ForbiddenSpec> forbidden;
    Objective objective = Objective::Edges;
    bool linear = false;  // triple universe only
    Budget budget;
    int threads = 1;
    int split_depth = 4;       // decisions expanded before handing subtrees to workers
    int symmetry_depth = -1;   // -1: per-universe default

    /// Throws std::invalid_argument for inconsistent or oversized problems.
    void validate() const;
    /// Canonical text form, e.g. "graph n=5 forbid=[cycle=4] objective=edges".
    std::string describe() const;
};

using Witness = std::variant<Graph, BipartiteGraph, TripleSystem>;

struct SearchResult {
    long long value = 0;
    Witness witness;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> wall_time{0};
};

struct UniverseLimits {
    int max_graph_n = 10;
    int max_bipartite_side = 8;
    int max_triple_n = 8;
};

/**
 * Exact extremal value by branch and bound over edge slots in lexicographic
 * order. The witness is the lexicographically least optimal edge list among
 * the subtrees not removed by symmetry pruning, independent of thread count.
 * If the budget runs out the best witness so far is returned with
 * optimal = false.
 */
SearchResult solve(const SearchProblem& problem, const UniverseLimits& limits = {});

/// Plain enumeration of every object in the universe (graphs n <= 7,
/// bipartite m*n <= 20, triples n <= 6).
SearchResult oracle_solve(const SearchProblem& problem);

/// Edges (or triangles) of a witness.
long long witness_value(const Witness& w, Objective objective);
bool witness_is_free(const Witness& w, std::span<const ForbiddenSpec> forbidden);

std::string universe_name(Universe u);
std::string objective_name(Objective o);
Universe parse_universe(std::string_view text);
Objective parse_objective(std::string_view text);

}  // namespace berge
