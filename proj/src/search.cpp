#include "berge_forge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace berge {

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kFar = 1 << 20;

struct Slot {
    std::array<Vertex, 3> v{};
    int arity = 2;
};

// Edge slots of a universe, in the fixed lexicographic decision order.
struct Space {
    Universe universe = Universe::Graph;
    int vertices = 0;  // host vertex count (m + n for bipartite)
    int left = 0;      // bipartite left part size
    std::vector<Slot> slots;
    std::vector<int> slot_of;  // vertex tuple -> slot index, -1 when not a slot

    int pair_slot(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return slot_of[a * vertices + b];
    }
    int triple_slot(Triple t) const {
        std::sort(t.begin(), t.end());
        return slot_of[(t[0] * vertices + t[1]) * vertices + t[2]];
    }
    int lookup(const Slot& s) const {
        return s.arity == 2 ? pair_slot(s.v[0], s.v[1]) : triple_slot({s.v[0], s.v[1], s.v[2]});
    }
};

Space make_space(const SearchProblem& p) {
    Space sp;
    sp.universe = p.universe;
    switch (p.universe) {
        case Universe::Graph:
            sp.vertices = p.n;
            sp.slot_of.assign(static_cast<std::size_t>(p.n) * p.n, -1);
            for (int u = 0; u < p.n; ++u) {
                for (int v = u + 1; v < p.n; ++v) {
                    sp.slot_of[u * p.n + v] = static_cast<int>(sp.slots.size());
                    sp.slots.push_back({{u, v, -1}, 2});
                }
            }
            break;
        case Universe::Bipartite: {
            sp.vertices = p.m + p.n;
            sp.left = p.m;
            const int V = sp.vertices;
            sp.slot_of.assign(static_cast<std::size_t>(V) * V, -1);
            for (int a = 0; a < p.m; ++a) {
                for (int b = 0; b < p.n; ++b) {
                    sp.slot_of[a * V + p.m + b] = static_cast<int>(sp.slots.size());
                    sp.slots.push_back({{a, p.m + b, -1}, 2});
                }
            }
            break;
        }
        case Universe::Triples: {
            sp.vertices = p.n;
            const int V = p.n;
            sp.slot_of.assign(static_cast<std::size_t>(V) * V * V, -1);
            for (int a = 0; a < V; ++a) {
                for (int b = a + 1; b < V; ++b) {
                    for (int c = b + 1; c < V; ++c) {
                        sp.slot_of[(a * V + b) * V + c] = static_cast<int>(sp.slots.size());
                        sp.slots.push_back({{a, b, c}, 3});
                    }
                }
            }
            break;
        }
    }
    return sp;
}

Witness build_witness(const SearchProblem& p, const Space& sp, const std::vector<int>& chosen) {
    switch (p.universe) {
        case Universe::Graph: {
            Graph g(p.n);
            for (int s : chosen) g.add_edge(sp.slots[s].v[0], sp.slots[s].v[1]);
            return g;
        }
        case Universe::Bipartite: {
            BipartiteGraph b(p.m, p.n);
            for (int s : chosen) b.add_edge(sp.slots[s].v[0], sp.slots[s].v[1] - p.m);
            return b;
        }
        case Universe::Triples: {
            std::vector<Triple> t;
            for (int s : chosen) t.push_back({sp.slots[s].v[0], sp.slots[s].v[1], sp.slots[s].v[2]});
            return TripleSystem(p.n, t);
        }
    }
    throw std::logic_error("unreachable");
}

Graph graph_from_masks(const std::vector<std::uint64_t>& adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        for (auto w = adj[u]; w != 0; w &= w - 1) {
            const int v = std::countr_zero(w);
            if (v > u) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<int> distances_from(const std::vector<std::uint64_t>& adj, int source) {
    std::vector<int> dist(adj.size(), kFar);
    dist[source] = 0;
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    for (int d = 1; frontier != 0; ++d) {
        std::uint64_t next = 0;
        for (auto f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        for (auto w = next; w != 0; w &= w - 1) dist[std::countr_zero(w)] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

// Simple path from x to target with exactly `left` edges avoiding `visited`.
bool path_with_edges(const std::vector<std::uint64_t>& adj, const std::vector<int>& dist_to_target, int x,
                     int target, int left, std::uint64_t visited) {
    if (left == 1) return (adj[x] >> target) & 1U;
    const std::uint64_t target_bit = std::uint64_t{1} << target;
    for (auto w = adj[x] & ~visited & ~target_bit; w != 0; w &= w - 1) {
        const int y = std::countr_zero(w);
        if (dist_to_target[y] > left - 1) continue;
        if (path_with_edges(adj, dist_to_target, y, target, left - 1, visited | (std::uint64_t{1} << y))) {
            return true;
        }
    }
    return false;
}

struct Shared {
    Budget budget;
    Clock::time_point start = Clock::now();
    std::atomic<long long> global_best{-1};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};

    void offer(long long value) {
        auto cur = global_best.load();
        while (cur < value && !global_best.compare_exchange_weak(cur, value)) {
        }
    }
};

class Worker {
public:
    Worker(const SearchProblem& p, const Space& sp, Shared& shared, int symmetry_depth)
        : p_(p), sp_(sp), shared_(shared), symmetry_depth_(symmetry_depth) {
        reset();
    }

    void reset() {
        adj_.assign(sp_.vertices, 0);
        pair_deg_.assign(static_cast<std::size_t>(sp_.vertices) * sp_.vertices, 0);
        triples_.clear();
        chosen_.clear();
        value_ = 0;
        best_ = -1;
        best_slots_.clear();
    }

    void set_parallel(bool on) { parallel_ = on; }
    void collect_at(int depth, std::vector<std::vector<int>>* out) {
        collect_depth_ = depth;
        tasks_ = out;
    }

    void replay(const std::vector<int>& includes) {
        for (int s : includes) include(s);
    }

    void explore(int i) {
        if (shared_.aborted.load(std::memory_order_relaxed)) return;
        const auto count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.budget.max_nodes != 0 && count > shared_.budget.max_nodes) {
            shared_.aborted = true;
            return;
        }
        if (shared_.budget.max_seconds > 0 && (count & 255U) == 0) {
            std::chrono::duration<double> el = Clock::now() - shared_.start;
            if (el.count() > shared_.budget.max_seconds) {
                shared_.aborted = true;
                return;
            }
        }
        if (tasks_ != nullptr && i == collect_depth_) {
            tasks_->push_back(chosen_);
            return;
        }
        const int total = static_cast<int>(sp_.slots.size());
        if (i == total) {
            if (value_ > best_) {
                best_ = value_;
                best_slots_ = chosen_;
                shared_.offer(value_);
            }
            return;
        }
        const long long ub = upper_bound(i);
        if (ub <= best_) return;
        if (parallel_ && ub < shared_.global_best.load(std::memory_order_relaxed)) return;

        if (feasible(i)) {
            include(i);
            if (i + 1 > symmetry_depth_ || canonical(i + 1)) explore(i + 1);
            remove(i);
        }
        if (i + 1 > symmetry_depth_ || canonical(i + 1)) explore(i + 1);
    }

    long long best() const { return best_; }
    const std::vector<int>& best_slots() const { return best_slots_; }

private:
    bool is_triples() const { return sp_.universe == Universe::Triples; }

    void include(int s) {
        const auto& slot = sp_.slots[s];
        if (is_triples()) {
            const auto& v = slot.v;
            triples_.push_back({v[0], v[1], v[2]});
            for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}}) {
                ++pair_deg_[a * sp_.vertices + b];
            }
            ++value_;
        } else {
            const int u = slot.v[0];
            const int v = slot.v[1];
            if (p_.objective == Objective::Triangles) value_ += std::popcount(adj_[u] & adj_[v]);
            else ++value_;
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
        chosen_.push_back(s);
    }

    void remove(int s) {
        const auto& slot = sp_.slots[s];
        if (is_triples()) {
            const auto& v = slot.v;
            triples_.pop_back();
            for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}}) {
                --pair_deg_[a * sp_.vertices + b];
            }
            --value_;
        } else {
            const int u = slot.v[0];
            const int v = slot.v[1];
            adj_[u] &= ~(std::uint64_t{1} << v);
            adj_[v] &= ~(std::uint64_t{1} << u);
            if (p_.objective == Objective::Triangles) value_ -= std::popcount(adj_[u] & adj_[v]);
            else --value_;
        }
        chosen_.pop_back();
    }

    bool linear_ok(int s) const {
        const auto& v = sp_.slots[s].v;
        const int V = sp_.vertices;
        return pair_deg_[v[0] * V + v[1]] == 0 && pair_deg_[v[0] * V + v[2]] == 0 && pair_deg_[v[1] * V + v[2]] == 0;
    }

    long long upper_bound(int i) const {
        const int total = static_cast<int>(sp_.slots.size());
        if (p_.objective == Objective::Triangles) {
            // Triangles not yet complete whose missing pairs are all still undecided.
            long long potential = 0;
            const int V = sp_.vertices;
            auto status = [&](int a, int b) {  // 0 present, 1 undecided, 2 excluded
                if ((adj_[a] >> b) & 1U) return 0;
                return sp_.pair_slot(a, b) >= i ? 1 : 2;
            };
            for (int a = 0; a < V; ++a) {
                for (int b = a + 1; b < V; ++b) {
                    const int sab = status(a, b);
                    if (sab == 2) continue;
                    for (int c = b + 1; c < V; ++c) {
                        const int sac = status(a, c);
                        const int sbc = status(b, c);
                        if (sac == 2 || sbc == 2) continue;
                        if (sab + sac + sbc > 0) ++potential;
                    }
                }
            }
            return value_ + potential;
        }
        if (is_triples() && p_.linear) {
            long long open = 0;
            for (int s = i; s < total; ++s) open += linear_ok(s) ? 1 : 0;
            return value_ + open;
        }
        return value_ + (total - i);
    }

    bool feasible(int s) {
        const auto& slot = sp_.slots[s];
        if (is_triples()) {
            if (p_.linear && !linear_ok(s)) return false;
            triples_.push_back({slot.v[0], slot.v[1], slot.v[2]});
            const auto last = triples_.size() - 1;
            bool ok = true;
            for (const auto& spec : p_.forbidden) {
                const int lo = spec.kind == ForbiddenKind::BergeCyclesUpTo ? 3 : spec.parameter;
                for (int len = lo; len <= spec.parameter && ok; ++len) {
                    if (detail::berge_search(sp_.vertices, triples_, len, last)) ok = false;
                }
                if (!ok) break;
            }
            triples_.pop_back();
            return ok;
        }

        const int u = slot.v[0];
        const int v = slot.v[1];
        const bool bipartite = sp_.universe == Universe::Bipartite;
        for (const auto& spec : p_.forbidden) {
            switch (spec.kind) {
                case ForbiddenKind::ExactCycle: {
                    if (bipartite && spec.parameter % 2 == 1) break;
                    const auto dist = distances_from(adj_, v);
                    if (dist[u] <= spec.parameter - 1 &&
                        path_with_edges(adj_, dist, u, v, spec.parameter - 1, std::uint64_t{1} << u)) {
                        return false;
                    }
                    break;
                }
                case ForbiddenKind::CyclesUpTo: {
                    const auto dist = distances_from(adj_, v);
                    if (dist[u] <= spec.parameter - 1) return false;
                    break;
                }
                case ForbiddenKind::Path:
                case ForbiddenKind::ThetaAtLeast: {
                    auto g = graph_from_masks(adj_);
                    g.add_edge(u, v);
                    const bool hit = spec.kind == ForbiddenKind::Path ? find_path(g, spec.parameter).has_value()
                                                                      : find_theta_at_least(g, spec.parameter).has_value();
                    if (hit) return false;
                    break;
                }
                default:
                    throw std::logic_error("search: Berge spec on a graph universe");
            }
        }
        return true;
    }

    // The decided prefix [0, depth) must be the include-first-least member of
    // its orbit under permutations of the prefix support that fix the prefix.
    bool canonical(int depth) const {
        std::vector<char> included(depth, 0);
        for (int s : chosen_) {
            if (s < depth) included[s] = 1;
        }
        std::vector<Vertex> support;
        for (int s = 0; s < depth; ++s) {
            const auto& slot = sp_.slots[s];
            for (int k = 0; k < slot.arity; ++k) support.push_back(slot.v[k]);
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());

        std::vector<Vertex> image = support;
        std::vector<Vertex> map(sp_.vertices);
        std::vector<char> mapped(depth);
        while (std::next_permutation(image.begin(), image.end())) {
            bool sides_ok = true;
            for (std::size_t k = 0; k < support.size(); ++k) {
                if (sp_.universe == Universe::Bipartite && ((support[k] < sp_.left) != (image[k] < sp_.left))) {
                    sides_ok = false;
                    break;
                }
                map[support[k]] = image[k];
            }
            if (!sides_ok) continue;
            bool stabilizes = true;
            std::fill(mapped.begin(), mapped.end(), 0);
            for (int s = 0; s < depth && stabilizes; ++s) {
                Slot img = sp_.slots[s];
                for (int k = 0; k < img.arity; ++k) img.v[k] = map[img.v[k]];
                const int t = sp_.lookup(img);
                if (t < 0 || t >= depth) stabilizes = false;
                else if (included[s]) mapped[t] = 1;
            }
            if (!stabilizes) continue;
            for (int s = 0; s < depth; ++s) {
                if (mapped[s] != included[s]) {
                    if (mapped[s]) return false;
                    break;
                }
            }
        }
        return true;
    }

    const SearchProblem& p_;
    const Space& sp_;
    Shared& shared_;
    int symmetry_depth_;
    bool parallel_ = false;
    int collect_depth_ = -1;
    std::vector<std::vector<int>>* tasks_ = nullptr;

    std::vector<std::uint64_t> adj_;
    std::vector<int> pair_deg_;
    std::vector<Triple> triples_;
    std::vector<int> chosen_;
    long long value_ = 0;
    long long best_ = -1;
    std::vector<int> best_slots_;
};

int default_symmetry_depth(Universe u) {
    return u == Universe::Triples ? 3 : 2;
}

void check_limits(const SearchProblem& p, const UniverseLimits& limits) {
    const bool ok = p.universe == Universe::Graph       ? p.n <= limits.max_graph_n
                    : p.universe == Universe::Bipartite ? (p.m <= limits.max_bipartite_side && p.n <= limits.max_bipartite_side)
                                                        : p.n <= limits.max_triple_n;
    if (!ok) throw std::invalid_argument("search: universe exceeds configured limits: " + p.describe());
}

}  // namespace

// -------------------------------------------------------------- SearchProblem

void SearchProblem::validate() const {
    if (n < 0 || m < 0) throw std::invalid_argument("search: negative universe size");
    if (universe != Universe::Bipartite && m != 0) throw std::invalid_argument("search: m applies to bipartite only");
    if (threads < 1) throw std::invalid_argument("search: threads must be positive");
    if (budget.max_seconds < 0) throw std::invalid_argument("search: negative time budget");
    if (objective == Objective::Triangles && universe != Universe::Graph) {
        throw std::invalid_argument("search: triangle objective needs the graph universe");
    }
    if (linear && universe != Universe::Triples) throw std::invalid_argument("search: linear needs the triple universe");
    for (const auto& f : forbidden) {
        f.validate();
        if (f.for_triples() != (universe == Universe::Triples)) {
            throw std::invalid_argument("search: " + f.to_string() + " does not apply to the " +
                                        universe_name(universe) + " universe");
        }
    }
    const int host = universe == Universe::Bipartite ? m + n : n;
    if (host > 64) throw std::invalid_argument("search: at most 64 vertices");
}

std::string SearchProblem::describe() const {
    std::ostringstream os;
    os << universe_name(universe);
    if (universe == Universe::Bipartite) os << " m=" << m;
    os << " n=" << n << " forbid=[";
    auto sorted = forbidden;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i].to_string();
    os << "] objective=" << objective_name(objective);
    if (linear) os << " linear";
    return os.str();
}

std::string universe_name(Universe u) {
    switch (u) {
        case Universe::Graph: return "graph";
        case Universe::Bipartite: return "bipartite";
        case Universe::Triples: return "triples";
    }
    return "?";
}

std::string objective_name(Objective o) {
    return o == Objective::Edges ? "edges" : "triangles";
}

Universe parse_universe(std::string_view text) {
    if (text == "graph") return Universe::Graph;
    if (text == "bipartite") return Universe::Bipartite;
    if (text == "triples" || text == "triple" || text == "hypergraph") return Universe::Triples;
    throw std::invalid_argument("unknown universe '" + std::string(text) + "'");
}

Objective parse_objective(std::string_view text) {
    if (text == "edges") return Objective::Edges;
    if (text == "triangles") return Objective::Triangles;
    throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

long long witness_value(const Witness& w, Objective objective) {
    return std::visit(
        [&](const auto& x) -> long long {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) {
                return objective == Objective::Triangles ? static_cast<long long>(triangle_count(x))
                                                         : static_cast<long long>(x.edge_count());
            } else if constexpr (std::is_same_v<T, BipartiteGraph>) {
                return static_cast<long long>(x.edge_count());
            } else {
                return static_cast<long long>(x.size());
            }
        },
        w);
}

bool witness_is_free(const Witness& w, std::span<const ForbiddenSpec> forbidden) {
    return std::visit([&](const auto& x) { return is_free(x, forbidden); }, w);
}

// ----------------------------------------------------------------------- solve

SearchResult solve(const SearchProblem& problem, const UniverseLimits& limits) {
    problem.validate();
    check_limits(problem, limits);
    const auto space = make_space(problem);
    const int total = static_cast<int>(space.slots.size());
    const int sym = problem.symmetry_depth < 0 ? default_symmetry_depth(problem.universe) : problem.symmetry_depth;

    Shared shared;
    shared.budget = problem.budget;

    long long best = -1;
    std::vector<int> best_slots;

    if (problem.threads <= 1 || total == 0) {
        Worker w(problem, space, shared, sym);
        w.explore(0);
        best = w.best();
        best_slots = w.best_slots();
    } else {
        std::vector<std::vector<int>> tasks;
        {
            Worker collector(problem, space, shared, sym);
            collector.collect_at(std::min(problem.split_depth, total), &tasks);
            collector.explore(0);
        }
        struct TaskResult {
            long long value = -1;
            std::vector<int> slots;
        };
        std::vector<TaskResult> results(tasks.size());
        std::atomic<std::size_t> next{0};
        const int depth = std::min(problem.split_depth, total);
        auto run = [&] {
            Worker w(problem, space, shared, sym);
            w.set_parallel(true);
            for (auto t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
                w.reset();
                w.replay(tasks[t]);
                w.explore(depth);
                results[t] = {w.best(), w.best_slots()};
            }
        };
        std::vector<std::thread> pool;
        for (int k = 0; k < problem.threads; ++k) pool.emplace_back(run);
        for (auto& th : pool) th.join();
        for (auto& r : results) {
            if (r.value > best) {
                best = r.value;
                best_slots = std::move(r.slots);
            }
        }
    }

    SearchResult result;
    result.optimal = !shared.aborted.load();
    if (best < 0) {
        best = 0;  // budget ran out before the first leaf; the empty object is always admissible
        best_slots.clear();
    }
    result.value = best;
    result.witness = build_witness(problem, space, best_slots);
    result.nodes_explored = shared.nodes.load();
    result.wall_time = Clock::now() - shared.start;

    if (!witness_is_free(result.witness, problem.forbidden) ||
        witness_value(result.witness, problem.objective) != result.value) {
        throw std::logic_error("solve: witness failed re-verification for " + problem.describe());
    }
    return result;
}

// ---------------------------------------------------------------------- oracle

SearchResult oracle_solve(const SearchProblem& problem) {
    problem.validate();
    const bool small = problem.universe == Universe::Graph       ? problem.n <= 7
                       : problem.universe == Universe::Bipartite ? problem.m * problem.n <= 20
                                                                 : problem.n <= 6;
    if (!small) throw std::invalid_argument("oracle_solve: universe too large: " + problem.describe());

    const auto start = Clock::now();
    const auto space = make_space(problem);
    const auto total = space.slots.size();
    long long best = -1;
    std::vector<int> best_slots;
    std::uint64_t visited = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        ++visited;
        std::vector<int> chosen;
        for (std::size_t s = 0; s < total; ++s) {
            if ((mask >> s) & 1U) chosen.push_back(static_cast<int>(s));
        }
        auto w = build_witness(problem, space, chosen);
        if (problem.linear && !is_linear(std::get<TripleSystem>(w))) continue;
        const auto value = witness_value(w, problem.objective);
        if (value < best || (value == best && chosen >= best_slots)) continue;
        if (!witness_is_free(w, problem.forbidden)) continue;
        best = value;
        best_slots = std::move(chosen);
    }
    SearchResult r;
    r.value = best;
    r.witness = build_witness(problem, space, best_slots);
    r.optimal = true;
    r.nodes_explored = visited;
    r.wall_time = Clock::now() - start;
    return r;
}

}  // namespace berge
