#include "berge_forge/detect.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <climits>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace berge {

namespace {

constexpr int kUnreached = INT_MAX / 2;

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.n());
    for (Vertex v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

// BFS distances from `source` using only vertices accepted by `allowed`.
template <class Allowed>
std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source, Allowed allowed) {
    std::vector<int> dist(adj.size(), kUnreached);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : adj[x]) {
            if (dist[y] == kUnreached && allowed(y)) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

// ------------------------------------------------------------ ForbiddenSpec

void ForbiddenSpec::validate() const {
    switch (kind) {
        case ForbiddenKind::ExactCycle:
        case ForbiddenKind::CyclesUpTo:
        case ForbiddenKind::BergeCycle:
        case ForbiddenKind::BergeCyclesUpTo:
            require(parameter >= 3, "forbidden spec: cycle length must be at least 3");
            break;
        case ForbiddenKind::Path:
            require(parameter >= 2, "forbidden spec: path must have at least 2 vertices");
            break;
        case ForbiddenKind::ThetaAtLeast:
            require(parameter >= 4, "forbidden spec: theta order must be at least 4");
            break;
    }
}

std::string ForbiddenSpec::to_string() const {
    const char* name = "cycle";
    switch (kind) {
        case ForbiddenKind::ExactCycle: name = "cycle"; break;
        case ForbiddenKind::CyclesUpTo: name = "girth"; break;
        case ForbiddenKind::Path: name = "path"; break;
        case ForbiddenKind::ThetaAtLeast: name = "theta"; break;
        case ForbiddenKind::BergeCycle: name = "berge"; break;
        case ForbiddenKind::BergeCyclesUpTo: name = "berge-upto"; break;
    }
    return std::string(name) + "=" + std::to_string(parameter);
}

ForbiddenSpec ForbiddenSpec::parse(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw std::invalid_argument("forbidden spec '" + std::string(text) + "': expected kind=value");
    }
    auto name = text.substr(0, eq);
    auto value = text.substr(eq + 1);
    ForbiddenSpec spec;
    if (name == "cycle") spec.kind = ForbiddenKind::ExactCycle;
    else if (name == "girth" || name == "cycles-upto") spec.kind = ForbiddenKind::CyclesUpTo;
    else if (name == "path") spec.kind = ForbiddenKind::Path;
    else if (name == "theta") spec.kind = ForbiddenKind::ThetaAtLeast;
    else if (name == "berge") spec.kind = ForbiddenKind::BergeCycle;
    else if (name == "berge-upto") spec.kind = ForbiddenKind::BergeCyclesUpTo;
    else throw std::invalid_argument("forbidden spec: unknown kind '" + std::string(name) + "'");
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), spec.parameter);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument("forbidden spec: bad parameter '" + std::string(value) + "'");
    }
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------- validators

bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) return false;
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

bool is_path_in(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 0 || sorted.back() >= g.n()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    return true;
}

bool ThetaWitness::valid_for(const Graph& g) const {
    const auto len = cycle.size();
    if (len < 4 || !is_cycle_in(g, cycle)) return false;
    auto pos = [&](Vertex x) -> std::ptrdiff_t {
        auto it = std::find(cycle.begin(), cycle.end(), x);
        return it == cycle.end() ? -1 : it - cycle.begin();
    };
    auto i = pos(chord.first);
    auto j = pos(chord.second);
    if (i < 0 || j < 0 || i == j) return false;
    auto gap = std::abs(i - j);
    if (gap == 1 || gap == static_cast<std::ptrdiff_t>(len) - 1) return false;
    return g.has_edge(chord.first, chord.second);
}

// --------------------------------------------------------------------- cycles

void for_each_cycle(const Graph& g, int length, const std::function<bool(std::span<const Vertex>)>& visit) {
    require(length >= 3, "cycle length must be at least 3");
    const int n = g.n();
    if (length > n) return;
    const auto adj = adjacency_lists(g);
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    path.reserve(length);
    bool stop = false;

    for (Vertex s = 0; s < n && !stop; ++s) {
        auto dist = bfs_distances(adj, s, [s](Vertex y) { return y > s; });
        auto extend = [&](auto&& self) -> void {
            const Vertex x = path.back();
            const int p = static_cast<int>(path.size());
            if (p == length) {
                if (g.has_edge(x, s) && path[1] < path[length - 1]) stop = !visit(path);
                return;
            }
            for (auto y : adj[x]) {
                if (y <= s || on_path[y] || dist[y] > length - p) continue;
                on_path[y] = 1;
                path.push_back(y);
                self(self);
                path.pop_back();
                on_path[y] = 0;
                if (stop) return;
            }
        };
        on_path[s] = 1;
        path.assign(1, s);
        extend(extend);
        on_path[s] = 0;
    }
}

std::size_t count_cycles(const Graph& g, int length) {
    std::size_t count = 0;
    for_each_cycle(g, length, [&](std::span<const Vertex>) {
        ++count;
        return true;
    });
    return count;
}

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length) {
    std::optional<std::vector<Vertex>> found;
    for_each_cycle(g, length, [&](std::span<const Vertex> c) {
        found.emplace(c.begin(), c.end());
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------- paths

std::optional<std::vector<Vertex>> find_path(const Graph& g, int vertices) {
    require(vertices >= 2, "path must have at least 2 vertices");
    const int n = g.n();
    if (vertices > n) return std::nullopt;
    const auto adj = adjacency_lists(g);

    std::vector<int> component(n, -1);
    std::vector<int> component_size;
    for (Vertex s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        auto dist = bfs_distances(adj, s, [](Vertex) { return true; });
        int size = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] != kUnreached) {
                component[v] = static_cast<int>(component_size.size());
                ++size;
            }
        }
        component_size.push_back(size);
    }

    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    // Vertices reachable from x without touching the current path, x included.
    auto room_from = [&](Vertex x) {
        auto dist = bfs_distances(adj, x, [&](Vertex y) { return !on_path[y]; });
        return static_cast<int>(std::count_if(dist.begin(), dist.end(), [](int d) { return d != kUnreached; }));
    };
    auto extend = [&](auto&& self) -> bool {
        const int p = static_cast<int>(path.size());
        if (p == vertices) return true;
        const Vertex x = path.back();
        if (p + room_from(x) - 1 < vertices) return false;
        for (auto y : adj[x]) {
            if (on_path[y]) continue;
            on_path[y] = 1;
            path.push_back(y);
            if (self(self)) return true;
            path.pop_back();
            on_path[y] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        if (component_size[component[s]] < vertices) continue;
        path.assign(1, s);
        on_path[s] = 1;
        if (extend(extend)) return path;
        on_path[s] = 0;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_path_dp(const Graph& g, int vertices) {
    require(vertices >= 2, "path must have at least 2 vertices");
    const int n = g.n();
    require(n <= 24, "subset path search supports at most 24 vertices");
    if (vertices > n) return std::nullopt;

    // ends[mask]: vertices v such that some path visits exactly `mask` and ends at v.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (auto w : g.neighbors(v)) nbr[v] |= 1U << w;
        ends[std::size_t{1} << v] = 1U << v;
    }
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto e = ends[mask];
        if (e == 0) continue;
        const int size = std::popcount(mask);
        if (size == vertices) {
            std::vector<Vertex> path;
            Vertex v = std::countr_zero(e);
            auto cur = mask;
            path.push_back(v);
            while (std::popcount(cur) > 1) {
                auto prev = cur & ~(1U << v);
                auto cand = ends[prev] & nbr[v];
                v = std::countr_zero(cand);
                path.push_back(v);
                cur = prev;
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto rest = e; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            for (auto out = nbr[v] & ~mask; out != 0; out &= out - 1) {
                const int w = std::countr_zero(out);
                ends[mask | (1U << w)] |= 1U << w;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------- theta

std::optional<ThetaWitness> find_theta_at_least(const Graph& g, int length) {
    require(length >= 4, "theta order must be at least 4");
    std::optional<ThetaWitness> found;
    for (int len = length; len <= g.n() && !found; ++len) {
        for_each_cycle(g, len, [&](std::span<const Vertex> c) {
            for (int i = 0; i < len; ++i) {
                for (int j = i + 2; j < len; ++j) {
                    if (i == 0 && j == len - 1) continue;
                    if (g.has_edge(c[i], c[j])) {
                        found = ThetaWitness{{c.begin(), c.end()}, make_edge(c[i], c[j])};
                        return false;
                    }
                }
            }
            return true;
        });
    }
    return found;
}

// ---------------------------------------------------------------------- Berge

namespace detail {

namespace {

class BergeSearch {
public:
    BergeSearch(int n, std::span<const Triple> edges, int length, std::optional<std::size_t> forced)
        : n_(n), edges_(edges), length_(length), forced_(forced), pair_edges_(static_cast<std::size_t>(n) * n),
          adj_(n), on_core_(n, 0), owner_(edges.size(), -1) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (forced && *forced == i) continue;
            const auto& t = edges[i];
            for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
                pair_edges_[a * n + b].push_back(static_cast<int>(i));
                pair_edges_[b * n + a].push_back(static_cast<int>(i));
            }
        }
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = 0; b < n; ++b) {
                if (!pair_edges_[a * n + b].empty()) adj_[a].push_back(b);
            }
        }
    }

    std::optional<BergeCycleWitness> run() {
        if (forced_) return run_forced();
        for (Vertex s = 0; s < n_; ++s) {
            anchor_ = s;
            dist_ = bfs_distances(adj_, s, [s](Vertex y) { return y > s; });
            core_.assign(1, s);
            on_core_[s] = 1;
            if (extend(s)) return witness();
            on_core_[s] = 0;
        }
        return std::nullopt;
    }

private:
    std::optional<BergeCycleWitness> run_forced() {
        const auto& t = edges_[*forced_];
        for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
            anchor_ = a;
            dist_ = bfs_distances(adj_, a, [](Vertex) { return true; });
            core_ = {a, b};
            pairs_ = {{a, b}};
            assigned_ = {static_cast<int>(*forced_)};
            on_core_[a] = on_core_[b] = 1;
            if (extend(a + n_)) return witness();
            on_core_[a] = on_core_[b] = 0;
            pairs_.clear();
            assigned_.clear();
        }
        return std::nullopt;
    }

    // min_vertex: core vertices after the anchor must exceed it (unanchored search passes a value >= n).
    bool extend(int min_vertex) {
        const int lower = min_vertex >= n_ ? -1 : min_vertex;
        const Vertex x = core_.back();
        const int p = static_cast<int>(core_.size());
        if (p == length_) return add_pair(x, anchor_, [] { return true; });
        for (auto y : adj_[x]) {
            if (y <= lower || on_core_[y] || dist_[y] > length_ - p) continue;
            on_core_[y] = 1;
            core_.push_back(y);
            if (add_pair(x, y, [&] { return extend(min_vertex); })) return true;
            core_.pop_back();
            on_core_[y] = 0;
        }
        return false;
    }

    // Adds core pair (a,b), keeps the matching perfect, then continues.
    template <class Next>
    bool add_pair(Vertex a, Vertex b, Next next) {
        const auto saved_owner = owner_;
        const auto saved_assigned = assigned_;
        pairs_.emplace_back(a, b);
        assigned_.push_back(-1);
        std::vector<char> visited(edges_.size(), 0);
        if (augment(static_cast<int>(pairs_.size()) - 1, visited) && next()) return true;
        pairs_.pop_back();
        owner_ = saved_owner;
        assigned_ = saved_assigned;
        return false;
    }

    bool augment(int pair, std::vector<char>& visited) {
        auto [a, b] = pairs_[pair];
        for (int e : pair_edges_[a * n_ + b]) {
            if (visited[e]) continue;
            visited[e] = 1;
            if (owner_[e] < 0 || augment(owner_[e], visited)) {
                owner_[e] = pair;
                assigned_[pair] = e;
                return true;
            }
        }
        return false;
    }

    BergeCycleWitness witness() const {
        BergeCycleWitness w;
        w.core = core_;
        for (int e : assigned_) w.hyperedges.push_back(static_cast<std::size_t>(e));
        return w;
    }

    int n_;
    std::span<const Triple> edges_;
    int length_;
    std::optional<std::size_t> forced_;
    std::vector<std::vector<int>> pair_edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> on_core_;
    std::vector<int> owner_;
    std::vector<int> dist_;
    std::vector<Vertex> core_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::vector<int> assigned_;
    Vertex anchor_ = 0;
};

}  // namespace

std::optional<BergeCycleWitness> berge_search(int n, std::span<const Triple> edges, int length,
                                              std::optional<std::size_t> forced) {
    require(length >= 2, "Berge cycle length must be at least 2");
    if (forced && *forced >= edges.size()) throw std::out_of_range("Berge search: forced edge index");
    if (static_cast<std::size_t>(length) > edges.size() || length > n) return std::nullopt;
    return BergeSearch(n, edges, length, forced).run();
}

bool has_path_with_edges(const Graph& g, Vertex u, Vertex v, int edges) {
    const auto adj = adjacency_lists(g);
    const auto dist = bfs_distances(adj, v, [](Vertex) { return true; });
    if (dist[u] > edges) return false;
    std::vector<char> on_path(g.n(), 0);
    on_path[u] = 1;
    auto walk = [&](auto&& self, Vertex x, int left) -> bool {
        if (left == 0) return x == v;
        for (auto y : adj[x]) {
            if (on_path[y] || dist[y] > left - 1) continue;
            if (y == v && left != 1) continue;
            on_path[y] = 1;
            bool ok = self(self, y, left - 1);
            on_path[y] = 0;
            if (ok) return true;
        }
        return false;
    };
    return walk(walk, u, edges);
}

}  // namespace detail

std::optional<BergeCycleWitness> find_berge_cycle(const TripleSystem& h, int length) {
    return detail::berge_search(h.n(), h.edges(), length, std::nullopt);
}

std::optional<BergeCycleWitness> find_berge_cycle_through(const TripleSystem& h, std::size_t edge, int length) {
    return detail::berge_search(h.n(), h.edges(), length, edge);
}

// -------------------------------------------------------------------- is_free

bool is_free(const Graph& g, const ForbiddenSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ForbiddenKind::ExactCycle:
            return !find_cycle(g, spec.parameter);
        case ForbiddenKind::CyclesUpTo:
            for (int len = 3; len <= spec.parameter; ++len) {
                if (find_cycle(g, len)) return false;
            }
            return true;
        case ForbiddenKind::Path:
            return !find_path(g, spec.parameter);
        case ForbiddenKind::ThetaAtLeast:
            return !find_theta_at_least(g, spec.parameter);
        case ForbiddenKind::BergeCycle:
        case ForbiddenKind::BergeCyclesUpTo:
            break;
    }
    throw std::invalid_argument("is_free: " + spec.to_string() + " applies to triple systems, not graphs");
}

bool is_free(const BipartiteGraph& b, const ForbiddenSpec& spec) {
    spec.validate();
    const auto g = b.to_graph();
    switch (spec.kind) {
        case ForbiddenKind::ExactCycle:
            return spec.parameter % 2 == 1 || !find_cycle(g, spec.parameter);
        case ForbiddenKind::CyclesUpTo:
            for (int len = 4; len <= spec.parameter; len += 2) {
                if (find_cycle(g, len)) return false;
            }
            return true;
        default:
            return is_free(g, spec);
    }
}

bool is_free(const TripleSystem& h, const ForbiddenSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ForbiddenKind::BergeCycle:
            return !find_berge_cycle(h, spec.parameter);
        case ForbiddenKind::BergeCyclesUpTo:
            for (int len = 3; len <= spec.parameter; ++len) {
                if (find_berge_cycle(h, len)) return false;
            }
            return true;
        default:
            break;
    }
    throw std::invalid_argument("is_free: " + spec.to_string() + " applies to graphs, not triple systems");
}

}  // namespace berge
