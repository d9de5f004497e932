#include <doctest.h>

#include <algorithm>
#include <random>

#include "berge_forge/constructions.hpp"
#include "berge_forge/decompose.hpp"
#include "berge_forge/detect.hpp"
#include "berge_forge/errors.hpp"
#include "berge_forge/random.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

TripleSystem triples_of(int n, std::vector<Triple> edges) { return TripleSystem(n, edges); }

const TripleSystem k4_3 = triples_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

}  // namespace

TEST_CASE("G2 keeps pairs covered twice") {
    CHECK(build_g2(triples_of(4, {{0, 1, 2}, {0, 1, 3}})).edges() == std::vector<Edge>{{0, 1}});
    CHECK(build_g2(triples_of(6, {{0, 1, 2}, {2, 3, 4}})).edge_count() == 0);
    CHECK(build_g2(k4_3) == complete_graph(4));
}

TEST_CASE("private pair split") {
    const auto single = split_h1_h2(triples_of(3, {{0, 1, 2}}));
    CHECK(single.h1 == EdgeIndices{0});
    CHECK(single.h2.empty());
    CHECK(single.private_pair.at(0) == Edge{0, 1});

    const auto full = split_h1_h2(k4_3);
    CHECK(full.h1.empty());
    CHECK(full.h2.size() == 4);

    const auto two = split_h1_h2(triples_of(4, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(two.h1 == EdgeIndices{0, 1});
    CHECK(two.private_pair.at(0) == Edge{0, 2});
    CHECK(two.private_pair.at(1) == Edge{0, 3});
}

TEST_CASE("two-colouring keeps a quarter of h1") {
    const auto h = triples_of(3, {{0, 1, 2}});
    const auto c = two_color_h3(h, split_h1_h2(h));
    CHECK(c.h3 == EdgeIndices{0});
    CHECK(c.color[0] == c.color[1]);
    CHECK(c.color[2] != c.color[0]);

    const TripleSystem empty(4);
    CHECK(two_color_h3(empty, split_h1_h2(empty)).h3.empty());

    std::mt19937_64 rng(5);
    const auto eight = random_triples_count(9, 8, rng);
    const auto split = split_h1_h2(eight);
    const auto col = two_color_h3(eight, split);
    CHECK(4 * col.h3.size() >= split.h1.size());
    CHECK(split.h1.size() >= 1);
}

TEST_CASE("h4 / h5 split uses pair degrees of the whole system") {
    // {0,1,2} has private pair 01; w = 2; deg(2,0) = 1, deg(2,1) = 2
    const auto h = triples_of(6, {{0, 1, 2}, {1, 2, 3}});
    const std::map<std::size_t, Edge> pp{{0, Edge{0, 1}}};
    auto [h4, h5] = split_h4_h5(h, {0}, pp);
    CHECK(h4.empty());
    CHECK(h5 == EdgeIndices{0});

    // deg(2,0) = 3
    const auto h3deg = triples_of(6, {{0, 1, 2}, {0, 2, 3}, {0, 2, 4}});
    auto [a4, a5] = split_h4_h5(h3deg, {0}, pp);
    CHECK(a4 == EdgeIndices{0});
    CHECK(a5.empty());
    CHECK(g4_graph(h3deg, a4, pp).edges() == std::vector<Edge>{{0, 1}});
    CHECK(g4_graph(h3deg, {}, pp).edge_count() == 0);
}

TEST_CASE("greedy linear subfamily") {
    const auto lin = triples_of(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    const std::map<std::size_t, Edge> pp{{0, Edge{0, 1}}, {1, Edge{2, 3}}, {2, Edge{4, 5}}};
    CHECK(greedy_linear(lin, {0, 1, 2}, pp) == EdgeIndices{0, 1, 2});
    CHECK(greedy_linear(lin, {}, pp).empty());

    // pair 01 appears three times: not a pipeline-built h5
    const auto bad = triples_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    const std::map<std::size_t, Edge> bad_pp{{0, Edge{0, 2}}};
    CHECK_THROWS_AS(greedy_linear(bad, {0}, bad_pp), PreconditionError);
}

TEST_CASE("decomposition pipeline invariants on random systems") {
    std::mt19937_64 rng(99);
    int with_h5 = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const auto h = random_triples_count(n, static_cast<int>(rng() % static_cast<std::uint64_t>(3 * n)), rng);
        const auto d = decompose(h);
        CAPTURE(trial);
        CHECK(d.h1.size() + d.h2.size() == h.size());
        CHECK(d.h3.size() == d.h4.size() + d.h5.size());
        CHECK(4 * d.h3.size() >= d.h1.size());
        CHECK(3 * d.h6.size() >= d.h5.size());
        CHECK(oracle::linear_by_pairs(h.subsystem(d.h6)));
        CHECK(std::includes(d.h5.begin(), d.h5.end(), d.h6.begin(), d.h6.end()));
        for (auto e : d.h1) {
            const auto [u, v] = d.private_pair.at(e);
            CHECK(oracle::pair_degree(h, u, v) == 1);
        }
        for (auto e : d.h2) {
            const auto& t = h[e];
            CHECK(oracle::pair_degree(h, t[0], t[1]) >= 2);
            CHECK(oracle::pair_degree(h, t[0], t[2]) >= 2);
            CHECK(oracle::pair_degree(h, t[1], t[2]) >= 2);
        }
        for (auto e : d.h3) {
            const auto [u, v] = d.private_pair.at(e);
            const auto& t = h[e];
            const int w = t[0] != u && t[0] != v ? t[0] : (t[1] != u && t[1] != v ? t[1] : t[2]);
            CHECK(d.coloring[u] == d.coloring[v]);
            CHECK(d.coloring[w] != d.coloring[u]);
        }
        with_h5 += d.h5.empty() ? 0 : 1;
    }
    CHECK(with_h5 > 20);
}

TEST_CASE("G2 of a Berge-free system avoids the plain cycle") {
    std::mt19937_64 rng(3);
    for (int l = 3; l <= 5; ++l) {
        int tested = 0;
        for (int attempt = 0; attempt < 20000 && tested < 200; ++attempt) {
            const int n = 6 + static_cast<int>(rng() % 4);
            const auto h = random_triples_count(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n)), rng);
            if (!is_free(h, ForbiddenSpec{ForbiddenKind::BergeCycle, l})) continue;
            ++tested;
            CHECK_FALSE(oracle::has_cycle(build_g2(h), l));
        }
        CHECK(tested == 200);
    }
}

TEST_CASE("rainbow tripartition") {
    const auto k3 = rainbow_tripartition(complete_graph(3));
    auto sorted = k3.classes;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3});
    CHECK(k3.rainbow_count == 1);

    const auto c5 = rainbow_tripartition(cycle_graph(5));
    CHECK(c5.rainbow_count == 0);
    CHECK(c5.triangles == 0);

    const auto k6 = rainbow_tripartition(complete_graph(6));
    CHECK(k6.triangles == 20);
    CHECK(k6.rainbow_count == 8);

    CHECK_THROWS_AS(rainbow_tripartition(Graph(2)), PreconditionError);
}

TEST_CASE("rainbow tripartition sizes and guarantee on random graphs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 20);
        const auto g = random_graph(n, static_cast<int>(rng() % 101), rng);
        const auto t = rainbow_tripartition(g);
        int sizes[4] = {0, 0, 0, 0};
        for (int c : t.classes) ++sizes[c];
        for (int i = 1; i <= 3; ++i) CHECK(sizes[i] == (n + i - 1) / 3);
        CHECK(t.triangles == triangle_count(g));
        std::size_t rainbow = 0;
        for (const auto& tri : triangle_list(g)) {
            const int a = t.classes[tri[0]], b = t.classes[tri[1]], c = t.classes[tri[2]];
            rainbow += (a != b && b != c && a != c) ? 1 : 0;
        }
        CHECK(rainbow == t.rainbow_count);
        CHECK(9 * t.rainbow_count >= 2 * t.triangles);
    }
}

TEST_CASE("triangle lemma") {
    CHECK(check_triangle_lemma(complete_graph(4), 5));
    CHECK(check_triangle_lemma(cycle_graph(5), 4));
    Graph bowtie(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
    CHECK(check_triangle_lemma(bowtie, 5));
    CHECK_THROWS_AS(check_triangle_lemma(cycle_graph(5), 5), PreconditionError);
}
