#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "mpres/cover.hpp"
#include "mpres/errors.hpp"
#include "mpres/homology.hpp"
#include "mpres/random_complex.hpp"

using namespace mpres;

TEST_CASE("double cover of the triangle boundary is a hexagon") {
    Cover c = build_cover(corpus::load("cycle3"), 2);
    CHECK(c.rank == 1);
    CHECK(c.sheet_count == 2);
    CHECK(c.total->vertex_count() == 6);
    CHECK(c.total->count(1) == 6);
    CHECK(is_connected(*c.total));
    CHECK(betti_numbers(*c.total, 2, 1) == std::vector<std::size_t>{1, 1});

    Cover c3 = build_cover(corpus::load("cycle3"), 3);
    CHECK(c3.total->vertex_count() == 9);
    CHECK(is_connected(*c3.total));
}

TEST_CASE("theta graph cover counts") {
    // Five edges on four vertices: l = 2, four sheets.
    Cover c = build_cover(corpus::load("theta"), 2);
    CHECK(c.rank == 2);
    CHECK(c.sheet_count == 4);
    CHECK(c.total->vertex_count() == 16);
    CHECK(c.total->count(1) == 20);
    CHECK(euler_characteristic(*c.total) == -4);
    CHECK(homology_basis(*c.total, 1, 2).rank == 5);
    CHECK(verify_cover(c, "theta").passed());
}

TEST_CASE("simply connected base has the trivial cover") {
    Cover c = build_cover(corpus::load("triangle"), 5);
    CHECK(c.rank == 0);
    CHECK(c.sheet_count == 1);
    CHECK(*c.total == SimplicialComplex(3, c.base->maximal_simplices()));
    CHECK(c.deck.generator_count() == 0);
}

TEST_CASE("voltages are a cocycle on triangles") {
    for (const char* name : {"torus7", "rp2", "klein"}) {
        auto k = corpus::load(name);
        for (std::uint32_t p : {2u, 3u}) {
            auto v = voltage_assignment(k, p);
            for (const Simplex& t : k->simplices(2)) {
                FpVector sum(v.rank, 0);
                for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}}) {
                    FpVector e = v.oriented(a, b);
                    for (std::size_t i = 0; i < sum.size(); ++i) {
                        sum[i] = (sum[i] + e[i]) % p;
                    }
                }
                CHECK(std::all_of(sum.begin(), sum.end(), [](std::uint32_t x) { return x == 0; }));
            }
            for (std::size_t e : v.tree_edges) {
                auto vals = v.voltages[e];
                CHECK(std::all_of(vals.begin(), vals.end(), [](std::uint32_t x) { return x == 0; }));
            }
        }
    }
}

TEST_CASE("cover vertex encoding round-trips") {
    Cover c = build_cover(corpus::load("torus7"), 3);
    CHECK(c.sheet_count == 9);
    for (Vertex x = 0; x < c.total->vertex_count(); ++x) {
        auto [v, sheet] = c.decode(x);
        CHECK(c.vertex(v, sheet) == x);
        CHECK(c.projection(x) == v);
    }
}

TEST_CASE("random complexes: sheets, Euler characteristic, zero map, deck quotient") {
    for (std::uint32_t p : {2u, 3u}) {
        std::mt19937_64 rng(100 + p);
        RandomComplexOptions opts;
        opts.max_sheets = p == 2 ? 16 : 27;
        for (int i = 0; i < 20; ++i) {
            auto base = random_connected_complex(rng, p, opts);
            CHECK(base->vertex_count() <= 10);
            CHECK(is_connected(*base));
            Cover c = build_cover(base, p);
            auto report = verify_cover(c, "random");
            CHECK(report.passed());
            CHECK(report.checks.size() == 4);
            CHECK(is_connected(*c.total));
        }
    }
}

TEST_CASE("disconnected base is rejected") {
    CHECK_THROWS_AS(build_cover(corpus::make({{0, 1}, {2, 3}}), 2), ValidationError);
    CHECK_THROWS_AS(build_cover(corpus::load("cycle3"), 9), ValidationError);
}

TEST_CASE("lifting a reflection that fixes a vertex") {
    auto circle = corpus::load("cycle3");
    Cover c = build_cover(circle, 2);
    GroupAction reflection(circle, 2, {{0, 2, 1}});
    GroupAction lifted = lift_action(c, reflection);
    REQUIRE(lifted.generator_count() == 1);
    const Permutation& g = lifted.generator(0);
    const Permutation& t = c.deck.generator(0);
    for (Vertex x = 0; x < c.total->vertex_count(); ++x) {
        CHECK(c.projection(g[x]) == reflection.generator(0)[c.projection(x)]);
        CHECK(g[t[x]] == t[g[x]]);
    }
    // the base point (0, 0) stays put
    CHECK(g[c.vertex(0, {0})] == c.vertex(0, {0}));
}

TEST_CASE("lift hypotheses") {
    auto circle = corpus::load("cycle3");
    Cover c = build_cover(circle, 3);
    GroupAction rotation(circle, 3, {{1, 2, 0}});
    CHECK_THROWS_WITH_AS(lift_action(c, rotation), doctest::Contains("the fixed point set is empty"), HypothesisError);

    // Swapping the two vertices 2, 3 of the theta graph exchanges two loops.
    auto theta = corpus::load("theta");
    Cover ct = build_cover(theta, 2);
    GroupAction swap(theta, 2, {{0, 1, 3, 2}});
    CHECK_THROWS_WITH_AS(lift_action(ct, swap), doctest::Contains("acts nontrivially on H_1"), HypothesisError);

    // The same swap is harmless where it acts trivially on homology.
    auto square = corpus::make({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Cover cs = build_cover(square, 2);
    GroupAction flip(square, 2, {{0, 1, 3, 2}});
    CHECK(lift_action(cs, flip).generator_count() == 1);
}
