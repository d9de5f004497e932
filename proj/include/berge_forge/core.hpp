#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace berge {

using Vertex = int;

/// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Three distinct vertices, stored ascending.
using Triple = std::array<Vertex, 3>;

Edge make_edge(Vertex u, Vertex v);
Triple make_triple(Vertex a, Vertex b, Vertex c);

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is a row of 64-bit words per vertex. For n <= 64 each row is a
 * single word and mask() gives direct access to it.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    int degree(Vertex v) const;
    int common_neighbor_count(Vertex u, Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const;
    std::uint64_t mask(Vertex v) const;

    /// All edges (u < v), ascending lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Bipartite graph with left part 0..m-1 and right part 0..n-1.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int m, int n);
    BipartiteGraph(int m, int n, std::span<const Edge> edges);

    int left_size() const { return m_; }
    int right_size() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges as (left, right), ascending. Duplicates are ignored.
    void add_edge(Vertex left, Vertex right);
    bool has_edge(Vertex left, Vertex right) const;
    const std::vector<Edge>& edges() const { return edges_; }

    /// Left vertex a becomes a, right vertex b becomes m + b.
    Graph to_graph() const;

    bool operator==(const BipartiteGraph& other) const = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<Edge> edges_;
};

/**
 * 3-uniform hypergraph on vertices 0..n-1. Each triple is sorted and the edge
 * list is sorted lexicographically without repeats, so edge indices are
 * canonical.
 */
class TripleSystem {
public:
    TripleSystem() = default;
    explicit TripleSystem(int n);
    TripleSystem(int n, std::span<const Triple> edges);

    int n() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Triple>& edges() const { return edges_; }
    const Triple& operator[](std::size_t i) const { return edges_[i]; }

    std::optional<std::size_t> index_of(const Triple& t) const;
    bool contains(const Triple& t) const { return index_of(t).has_value(); }

    /// Sub-system formed by the given edge indices (same vertex count).
    TripleSystem subsystem(std::span<const std::size_t> indices) const;

    bool operator==(const TripleSystem& other) const = default;

private:
    int n_ = 0;
    std::vector<Triple> edges_;
};

/// Pair multiplicities of a triple system. Only pairs with multiplicity >= 1
/// are stored.
class PairDegreeMap {
public:
    static std::uint64_t key(Vertex u, Vertex v);
    static Edge unpack(std::uint64_t key);

    void increment(Vertex u, Vertex v);
    int get(Vertex u, Vertex v) const;
    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    long long total() const;
    int max_multiplicity() const;

    /// (pair, multiplicity), pairs ascending.
    std::vector<std::pair<Edge, int>> entries() const;

    bool operator==(const PairDegreeMap& other) const = default;

private:
    std::map<std::uint64_t, int> counts_;
};

/**
 * Berge cycle certificate: core vertices v_0..v_{l-1} and hyperedge indices
 * H_0..H_{l-1} with {v_i, v_{i+1 mod l}} contained in H_i.
 */
struct BergeCycleWitness {
    std::vector<Vertex> core;
    std::vector<std::size_t> hyperedges;

    std::size_t length() const { return core.size(); }
    bool valid_for(const TripleSystem& h) const;
};

PairDegreeMap shadow_pairs(const TripleSystem& h);
bool is_linear(const TripleSystem& h);

std::vector<Triple> triangle_list(const Graph& g);
std::size_t triangle_count(const Graph& g);

/// Edges of G[N(x)]; t(x) in triangle counting identities.
std::size_t neighborhood_edge_count(const Graph& g, Vertex x);

}  // namespace berge
