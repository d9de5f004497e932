#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berge_forge/core.hpp"

namespace berge {

enum class ForbiddenKind {
    ExactCycle,       // C_l
    CyclesUpTo,       // every cycle of length 3..l (girth > l)
    Path,             // path on k vertices
    ThetaAtLeast,     // cycle of length >= l with a chord
    BergeCycle,       // Berge cycle of length l
    BergeCyclesUpTo,  // Berge cycles of length 3..l
};

struct ForbiddenSpec {
    ForbiddenKind kind = ForbiddenKind::ExactCycle;
    int parameter = 3;

    /// Throws std::invalid_argument when the parameter is out of range.
    void validate() const;
    bool for_triples() const {
        return kind == ForbiddenKind::BergeCycle || kind == ForbiddenKind::BergeCyclesUpTo;
    }

    /// "cycle=4", "girth=4", "path=4", "theta=6", "berge=5", "berge-upto=5".
    std::string to_string() const;
    static ForbiddenSpec parse(std::string_view text);

    bool operator==(const ForbiddenSpec&) const = default;
    auto operator<=>(const ForbiddenSpec&) const = default;
};

/// A cycle of the host graph together with a chord of it.
struct ThetaWitness {
    std::vector<Vertex> cycle;
    Edge chord;

    bool valid_for(const Graph& g) const;
};

bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle);
bool is_path_in(const Graph& g, std::span<const Vertex> path);

/**
 * Calls visit once per cycle of the given length. Each cycle is reported as
 * (v_0, ..., v_{l-1}) with v_0 its smallest vertex and v_1 < v_{l-1}. Stops
 * early when visit returns false.
 */
void for_each_cycle(const Graph& g, int length, const std::function<bool(std::span<const Vertex>)>& visit);
std::size_t count_cycles(const Graph& g, int length);

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length);
std::optional<std::vector<Vertex>> find_path(const Graph& g, int vertices);
/// Subset dynamic program over vertex sets; n <= 24.
std::optional<std::vector<Vertex>> find_path_dp(const Graph& g, int vertices);
std::optional<ThetaWitness> find_theta_at_least(const Graph& g, int length);

std::optional<BergeCycleWitness> find_berge_cycle(const TripleSystem& h, int length);
/// Berge cycles of the given length that use hyperedge `edge` as H_0.
std::optional<BergeCycleWitness> find_berge_cycle_through(const TripleSystem& h, std::size_t edge, int length);

bool is_free(const Graph& g, const ForbiddenSpec& spec);
bool is_free(const BipartiteGraph& b, const ForbiddenSpec& spec);
bool is_free(const TripleSystem& h, const ForbiddenSpec& spec);

template <class Host>
bool is_free(const Host& host, std::span<const ForbiddenSpec> specs) {
    for (const auto& s : specs) {
        if (!is_free(host, s)) return false;
    }
    return true;
}

namespace detail {

/// Berge search over an unsorted triple list; `forced` pins H_0.
std::optional<BergeCycleWitness> berge_search(int n, std::span<const Triple> edges, int length,
                                              std::optional<std::size_t> forced);

/// True when G has a u-v path with exactly `edges` edges (G need not contain uv).
bool has_path_with_edges(const Graph& g, Vertex u, Vertex v, int edges);

}  // namespace detail

}  // namespace berge
