#include "berge_forge/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace berge {

Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") out of range for n = " + std::to_string(n_));
    }
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (has_edge(u, v)) return;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return;
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

int Graph::common_neighbor_count(Vertex u, Vertex v) const {
    auto a = row(u);
    auto b = row(v);
    int c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
        for (auto w = r[i]; w != 0; w &= w - 1) {
            out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        }
    }
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

std::uint64_t Graph::mask(Vertex v) const {
    if (n_ > 64) throw std::logic_error("graph: mask() requires n <= 64");
    return bits_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

// ------------------------------------------------------- BipartiteGraph

BipartiteGraph::BipartiteGraph(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("bipartite graph: negative part size");
}

BipartiteGraph::BipartiteGraph(int m, int n, std::span<const Edge> edges) : BipartiteGraph(m, n) {
    for (auto [a, b] : edges) add_edge(a, b);
}

void BipartiteGraph::add_edge(Vertex left, Vertex right) {
    if (left < 0 || left >= m_ || right < 0 || right >= n_) {
        throw std::invalid_argument("bipartite graph: edge (" + std::to_string(left) + ", " +
                                    std::to_string(right) + ") out of range");
    }
    Edge e{left, right};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
}

bool BipartiteGraph::has_edge(Vertex left, Vertex right) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{left, right});
}

Graph BipartiteGraph::to_graph() const {
    Graph g(m_ + n_);
    for (auto [a, b] : edges_) g.add_edge(a, m_ + b);
    return g;
}

// --------------------------------------------------------- TripleSystem

TripleSystem::TripleSystem(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("triple system: negative vertex count");
}

TripleSystem::TripleSystem(int n, std::span<const Triple> edges) : TripleSystem(n) {
    edges_.reserve(edges.size());
    for (const auto& raw : edges) {
        auto t = make_triple(raw[0], raw[1], raw[2]);
        if (t[0] < 0 || t[2] >= n) {
            throw std::invalid_argument("triple system: vertex out of range in {" + std::to_string(raw[0]) +
                                        "," + std::to_string(raw[1]) + "," + std::to_string(raw[2]) + "}");
        }
        if (t[0] == t[1] || t[1] == t[2]) {
            throw std::invalid_argument("triple system: repeated vertex in {" + std::to_string(raw[0]) + "," +
                                        std::to_string(raw[1]) + "," + std::to_string(raw[2]) + "}");
        }
        edges_.push_back(t);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::optional<std::size_t> TripleSystem::index_of(const Triple& t) const {
    auto sorted = make_triple(t[0], t[1], t[2]);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted);
    if (it == edges_.end() || *it != sorted) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

TripleSystem TripleSystem::subsystem(std::span<const std::size_t> indices) const {
    std::vector<Triple> picked;
    picked.reserve(indices.size());
    for (auto i : indices) picked.push_back(edges_.at(i));
    return TripleSystem(n_, picked);
}

// -------------------------------------------------------- PairDegreeMap

std::uint64_t PairDegreeMap::key(Vertex u, Vertex v) {
    auto [a, b] = make_edge(u, v);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

Edge PairDegreeMap::unpack(std::uint64_t key) {
    return {static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffU)};
}

void PairDegreeMap::increment(Vertex u, Vertex v) {
    ++counts_[key(u, v)];
}

int PairDegreeMap::get(Vertex u, Vertex v) const {
    auto it = counts_.find(key(u, v));
    return it == counts_.end() ? 0 : it->second;
}

long long PairDegreeMap::total() const {
    long long s = 0;
    for (const auto& [k, c] : counts_) s += c;
    return s;
}

int PairDegreeMap::max_multiplicity() const {
    int m = 0;
    for (const auto& [k, c] : counts_) m = std::max(m, c);
    return m;
}

std::vector<std::pair<Edge, int>> PairDegreeMap::entries() const {
    std::vector<std::pair<Edge, int>> out;
    out.reserve(counts_.size());
    for (const auto& [k, c] : counts_) out.emplace_back(unpack(k), c);
    return out;
}

// ---------------------------------------------------------------- misc

bool BergeCycleWitness::valid_for(const TripleSystem& h) const {
    const auto len = core.size();
    if (len < 2 || hyperedges.size() != len) return false;
    auto sorted_core = core;
    std::sort(sorted_core.begin(), sorted_core.end());
    if (std::adjacent_find(sorted_core.begin(), sorted_core.end()) != sorted_core.end()) return false;
    auto sorted_edges = hyperedges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (hyperedges[i] >= h.size()) return false;
        const auto& e = h[hyperedges[i]];
        auto in = [&](Vertex x) { return std::find(e.begin(), e.end(), x) != e.end(); };
        if (!in(core[i]) || !in(core[(i + 1) % len])) return false;
    }
    return true;
}

PairDegreeMap shadow_pairs(const TripleSystem& h) {
    PairDegreeMap m;
    for (const auto& t : h.edges()) {
        m.increment(t[0], t[1]);
        m.increment(t[0], t[2]);
        m.increment(t[1], t[2]);
    }
    return m;
}

bool is_linear(const TripleSystem& h) {
    return shadow_pairs(h).max_multiplicity() <= 1;
}

std::vector<Triple> triangle_list(const Graph& g) {
    std::vector<Triple> out;
    for (Vertex a = 0; a < g.n(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

std::size_t triangle_count(const Graph& g) {
    std::size_t t = 0;
    for (auto [u, v] : g.edges()) t += static_cast<std::size_t>(g.common_neighbor_count(u, v));
    return t / 3;
}

std::size_t neighborhood_edge_count(const Graph& g, Vertex x) {
    std::size_t e = 0;
    auto nbrs = g.neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (g.has_edge(nbrs[i], nbrs[j])) ++e;
        }
    }
    return e;
}

}  // namespace berge
