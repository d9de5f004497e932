#include <doctest.h>

#include <random>

#include "berge_forge/constructions.hpp"
#include "berge_forge/detect.hpp"
#include "berge_forge/random.hpp"
#include "oracles.hpp"

using namespace berge;

TEST_CASE("triangle hypergraph") {
    CHECK(triangle_hypergraph(complete_graph(4)).size() == 4);
    CHECK(triangle_hypergraph(cycle_graph(5)).empty());
    Graph bowtie(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
    const auto h = triangle_hypergraph(bowtie);
    CHECK(h.edges() == std::vector<Triple>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("doubling one side of a bipartite graph") {
    BipartiteGraph single(1, 1);
    single.add_edge(0, 0);
    const auto one = double_one_side(single);
    CHECK(one.n() == 3);
    CHECK(one.edges() == std::vector<Triple>{{0, 1, 2}});

    const auto c6 = double_one_side(bipartite_cycle(3));
    CHECK(c6.n() == 9);
    CHECK(c6.size() == 6);
    CHECK(is_free(c6, ForbiddenSpec{ForbiddenKind::BergeCycle, 4}));
    CHECK_FALSE(oracle::has_berge_cycle(c6, 4));
    // the C6 itself survives as a Berge 6-cycle
    CHECK(find_berge_cycle(c6, 6));

    const auto c10 = double_one_side(bipartite_cycle(5));
    CHECK(is_free(c10, ForbiddenSpec{ForbiddenKind::BergeCycle, 4}));
    CHECK(is_free(c10, ForbiddenSpec{ForbiddenKind::BergeCycle, 6}));
}

TEST_CASE("C5 blow-up") {
    const auto c5 = blowup_c5(5);
    CHECK(c5 == cycle_graph(5));
    CHECK(count_cycles(c5, 5) == 1);
    const auto b10 = blowup_c5(10);
    CHECK(b10.edge_count() == 20);
    CHECK(count_cycles(b10, 5) == 32);
    CHECK(count_cycles(b10, 3) == 0);
    CHECK(oracle::cycles_by_walks(b10, 5) == 32);
    CHECK(count_cycles(blowup_c5(15), 5) == 243);
    CHECK_THROWS_AS(blowup_c5(7), std::invalid_argument);
    CHECK_THROWS_AS(blowup_c5(0), std::invalid_argument);
}

TEST_CASE("basic families") {
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(path_graph(6).edge_count() == 5);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(complete_graph(6).edge_count() == 15);
    const auto b = bipartite_cycle(4);
    CHECK(b.edge_count() == 8);
    CHECK(count_cycles(b.to_graph(), 8) == 1);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("triangles of an odd-cycle-free graph carry no Berge cycle of that length") {
    std::mt19937_64 rng(7);
    for (int l : {5, 7}) {
        int tested = 0;
        int nonempty = 0;
        for (int attempt = 0; attempt < 20000 && tested < 150; ++attempt) {
            const int n = 4 + static_cast<int>(rng() % 6);
            const auto g = random_graph(n, 25 + static_cast<int>(rng() % 60), rng);
            if (!is_free(g, ForbiddenSpec{ForbiddenKind::ExactCycle, l})) continue;
            ++tested;
            const auto h = triangle_hypergraph(g);
            nonempty += h.empty() ? 0 : 1;
            CHECK(is_free(h, ForbiddenSpec{ForbiddenKind::BergeCycle, l}));
        }
        CHECK(tested == 150);
        CHECK(nonempty > 10);
    }
}
