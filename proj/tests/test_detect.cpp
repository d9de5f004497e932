#include <doctest.h>

#include <random>

#include "berge_forge/constructions.hpp"
#include "berge_forge/detect.hpp"
#include "berge_forge/random.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Graph graph_of(int n, std::initializer_list<Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

TripleSystem triples_of(int n, std::vector<Triple> edges) { return TripleSystem(n, edges); }

}  // namespace

TEST_CASE("fixed-length cycles") {
    const auto c5 = cycle_graph(5);
    auto found = find_cycle(c5, 5);
    REQUIRE(found);
    CHECK(is_cycle_in(c5, *found));
    CHECK_FALSE(find_cycle(c5, 4));
    CHECK(find_cycle(complete_graph(4), 3));
    CHECK(count_cycles(complete_graph(4), 4) == 3);
    CHECK(count_cycles(complete_graph(5), 5) == 12);
    CHECK(count_cycles(Graph(0), 3) == 0);
}

TEST_CASE("cycle enumeration reports each cycle once in normal form") {
    std::size_t seen = 0;
    for_each_cycle(complete_graph(5), 4, [&](std::span<const Vertex> c) {
        CHECK(c.size() == 4);
        CHECK(c[0] < c[1]);
        CHECK(c[0] < c[2]);
        CHECK(c[0] < c[3]);
        CHECK(c[1] < c[3]);
        ++seen;
        return true;
    });
    CHECK(seen == 15);
    std::size_t stopped = 0;
    for_each_cycle(complete_graph(5), 3, [&](std::span<const Vertex>) { return ++stopped < 2; });
    CHECK(stopped == 2);
}

TEST_CASE("paths") {
    const auto p5 = path_graph(5);
    auto p = find_path(p5, 5);
    REQUIRE(p);
    CHECK(is_path_in(p5, *p));
    CHECK_FALSE(find_path(complete_graph(3), 4));
    const auto two_triangles = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(find_path(two_triangles, 4));
    CHECK_FALSE(find_path_dp(two_triangles, 4));
    CHECK(find_path_dp(p5, 5));
}

TEST_CASE("theta graphs") {
    auto c6 = cycle_graph(6);
    CHECK_FALSE(find_theta_at_least(c6, 4));
    c6.add_edge(0, 3);
    auto t = find_theta_at_least(c6, 6);
    REQUIRE(t);
    CHECK(t->valid_for(c6));
    CHECK(t->cycle.size() >= 6);
    auto k4 = find_theta_at_least(complete_graph(4), 4);
    REQUIRE(k4);
    CHECK(k4->valid_for(complete_graph(4)));
}

TEST_CASE("Berge cycles") {
    const auto h = triples_of(7, {{1, 2, 4}, {2, 3, 5}, {1, 3, 6}});
    auto w = find_berge_cycle(h, 3);
    REQUIRE(w);
    CHECK(w->valid_for(h));
    auto core = w->core;
    std::sort(core.begin(), core.end());
    CHECK(core == std::vector<Vertex>{1, 2, 3});

    CHECK_FALSE(find_berge_cycle(h, 4));
    const auto k4 = triples_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(find_berge_cycle(k4, 3));
    CHECK(find_berge_cycle(k4, 4));
    CHECK(is_free(triples_of(3, {{0, 1, 2}}), ForbiddenSpec{ForbiddenKind::BergeCycle, 3}));
    auto through = find_berge_cycle_through(k4, 3, 4);
    REQUIRE(through);
    CHECK(through->hyperedges.front() == 3);
    CHECK(through->valid_for(k4));
}

TEST_CASE("freeness checks") {
    CHECK(is_free(cycle_graph(6), ForbiddenSpec{ForbiddenKind::CyclesUpTo, 4}));
    CHECK_FALSE(is_free(complete_graph(4), ForbiddenSpec{ForbiddenKind::ExactCycle, 4}));
    CHECK(is_free(bipartite_cycle(3), ForbiddenSpec{ForbiddenKind::ExactCycle, 5}));
    CHECK_FALSE(is_free(bipartite_cycle(3), ForbiddenSpec{ForbiddenKind::ExactCycle, 6}));
    CHECK_THROWS_AS(is_free(complete_graph(3), ForbiddenSpec{ForbiddenKind::BergeCycle, 3}), std::invalid_argument);
    CHECK_THROWS_AS(is_free(TripleSystem(3), ForbiddenSpec{ForbiddenKind::ExactCycle, 3}), std::invalid_argument);
    const std::vector<ForbiddenSpec> both{{ForbiddenKind::ExactCycle, 3}, {ForbiddenKind::ExactCycle, 4}};
    CHECK(is_free(cycle_graph(5), std::span<const ForbiddenSpec>(both)));
    CHECK_FALSE(is_free(complete_graph(4), std::span<const ForbiddenSpec>(both)));
}

TEST_CASE("forbidden spec text form") {
    for (const char* text : {"cycle=4", "girth=4", "path=4", "theta=6", "berge=5", "berge-upto=5"}) {
        CHECK(ForbiddenSpec::parse(text).to_string() == text);
    }
    CHECK_THROWS_AS(ForbiddenSpec::parse("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenSpec::parse("wheel=4"), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenSpec::parse("cycle=2"), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenSpec::parse("theta=3"), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenSpec::parse("path=x"), std::invalid_argument);
}

TEST_CASE("graph detectors agree with brute force on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const auto g = random_graph(n, static_cast<int>(rng() % 101), rng);
        CAPTURE(trial);
        for (int l = 3; l <= 7; ++l) {
            CHECK(static_cast<long long>(count_cycles(g, l)) == oracle::cycles_by_walks(g, l));
            const auto c = find_cycle(g, l);
            CHECK(c.has_value() == oracle::has_cycle(g, l));
            if (c) CHECK(is_cycle_in(g, *c));
        }
        for (int k = 2; k <= 7; ++k) {
            const auto p = find_path(g, k);
            CHECK(p.has_value() == oracle::has_path(g, k));
            CHECK(find_path_dp(g, k).has_value() == p.has_value());
            if (p) CHECK(is_path_in(g, *p));
        }
        for (int l = 4; l <= 7; ++l) {
            const auto t = find_theta_at_least(g, l);
            CHECK(t.has_value() == oracle::has_theta(g, l));
            if (t) CHECK(t->valid_for(g));
        }
    }
}

TEST_CASE("Berge detector agrees with brute force on random triple systems") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const auto h = random_triples_count(n, 1 + static_cast<int>(rng() % 8), rng);
        CAPTURE(trial);
        for (int l = 2; l <= 6; ++l) {
            const auto w = find_berge_cycle(h, l);
            CHECK(w.has_value() == oracle::has_berge_cycle(h, l));
            if (w) CHECK(w->valid_for(h));
        }
        for (std::size_t e = 0; e < h.size(); ++e) {
            if (auto w = find_berge_cycle_through(h, e, 4)) {
                CHECK(w->valid_for(h));
                CHECK(w->hyperedges.front() == e);
            }
        }
    }
}

TEST_CASE("too few hyperedges means no Berge cycle") {
    const auto h = triples_of(6, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    CHECK_FALSE(find_berge_cycle(h, 4));
}
