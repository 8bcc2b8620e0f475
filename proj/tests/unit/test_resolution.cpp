#include "corpus.hpp"
#include "doctest.h"
#include "mpres/errors.hpp"
#include "mpres/homology.hpp"
#include "mpres/resolution.hpp"

using namespace mpres;

TEST_CASE("one-dimensional complexes resolve to themselves") {
    for (const char* name : {"cycle3", "theta", "cycle6"}) {
        auto l = corpus::load(name);
        ResolutionStage s = resolve(l, 2);
        CHECK(s.generator_count() == 0);
        CHECK(s.total->vertex_count() == l->vertex_count());
        CHECK(s.total->maximal_simplices() == l->maximal_simplices());
        CHECK(s.orbit_map.vertex_map() == SimplicialMap::identity(l).vertex_map());
        CHECK(s.report.passed());
    }
}

TEST_CASE("resolving the triangle") {
    auto l = corpus::load("triangle");
    ResolutionStage s = resolve(l, 2);
    CHECK(s.generator_count() == 1);
    REQUIRE(s.pieces.size() == 1);
    CHECK(s.pieces[0].rank == 1);
    CHECK(s.pieces[0].cover->total->vertex_count() == 6);
    // preimage of the whole triangle is the cone of the double circle cover
    auto whole = carrier_preimage(s.orbit_map, s.carriers, {0, 1, 2}, false);
    CHECK(homology_basis(*whole.complex, 1, 2).rank == 1);
    auto boundary = carrier_preimage(s.orbit_map, s.carriers, {0, 1, 2}, true);
    CHECK(boundary.complex->vertex_count() == 3);
    CHECK(s.report.passed());
    CHECK(s.report.named("star").size() == 7);
    for (const Check& c : s.report.named("star")) {
        CHECK(c.classification == "iso");
    }
    CHECK(s.report.named("skeleton_h1")[0].classification == "iso");
    // the apex sits over the barycenter, carried by the open triangle
    CHECK(s.orbit_map(s.pieces[0].apex) == s.pieces[0].barycenter);
    CHECK(s.carriers[s.pieces[0].barycenter] == Simplex{0, 1, 2});
    // the subdivision is a disk again
    CHECK(betti_numbers(*s.subdivision, 2, 2, true) == std::vector<std::size_t>{0, 0, 0});
    CHECK(euler_characteristic(*s.subdivision) == 1);
}

TEST_CASE("resolving the boundary of the tetrahedron") {
    auto l = corpus::load("tetra_boundary");
    ResolutionStage s = resolve(l, 2);
    CHECK(s.generator_count() == 4);
    for (const ResolvedSimplex& r : s.pieces) {
        CHECK(r.rank == 1);
    }
    CHECK(s.report.passed());
    CHECK(s.report.named("star").size() == 14);
    CHECK(euler_characteristic(*s.subdivision) == 2);
}

TEST_CASE("identity stage fails exactly at the 2-simplex") {
    ResolutionStage s = identity_stage(corpus::load("triangle"), 2);
    CHECK_FALSE(s.report.passed());
    std::vector<Check> failed_star;
    for (const Check& c : s.report.failures()) {
        if (c.name == "star") {
            failed_star.push_back(c);
        }
    }
    REQUIRE(failed_star.size() == 1);
    CHECK(failed_star[0].subject == "[0,1,2]");
    CHECK(failed_star[0].ranks == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("star checks on larger surfaces, several primes") {
    for (const char* name : {"torus7", "rp2", "klein"}) {
        for (std::uint32_t p : {2u, 3u}) {
            CAPTURE(name);
            CAPTURE(p);
            ResolutionStage s = resolve(corpus::load(name), p);
            CHECK(s.report.passed());
            std::size_t m = 0;
            for (const ResolvedSimplex& r : s.pieces) {
                m += r.rank;
            }
            CHECK(m == s.generator_count());
            // 1-skeleton preimage embeds with H_1 iso
            for (const char* check : {"skeleton_embedding", "skeleton_h1", "quotient", "fixed_skeleton"}) {
                REQUIRE(s.report.named(check).size() == 1);
                CHECK(s.report.named(check)[0].passed);
            }
        }
    }
}

TEST_CASE("Mayer-Vietoris consistency") {
    struct Case {
        const char* name;
        Simplex top;
    };
    for (const Case& c : {Case{"tetra_boundary", {1, 2, 3}}, Case{"torus7", {0, 1, 3}}, Case{"rp2", {0, 1, 2}}}) {
        for (std::uint32_t p : {2u, 3u}) {
            CAPTURE(c.name);
            ResolutionStage s = resolve(corpus::load(c.name), p);
            MayerVietoris mv = mayer_vietoris_ranks(s, c.top);
            CHECK(mv.direct == mv.predicted);
            // the star and skeleton checks force H_1 of the resolution to agree with the 1-skeleton
            CHECK(mv.direct == mv.skeleton);
        }
    }
    ResolutionStage single = resolve(corpus::load("triangle"), 2);
    CHECK_THROWS_AS(mayer_vietoris_ranks(single, {0, 1, 2}), ValidationError);
}

TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(resolve(corpus::make({{0, 1, 2}, {3, 4, 5}}), 2), ValidationError);
    CHECK_THROWS_AS(resolve(corpus::load("triangle"), 6), ValidationError);
}

TEST_CASE("resolution is deterministic and thread-count independent") {
    auto l = corpus::load("torus7");
    ResolutionStage a = resolve(l, 3);
    setenv("MPRES_THREADS", "1", 1);
    ResolutionStage b = resolve(l, 3);
    unsetenv("MPRES_THREADS");
    CHECK(*a.total == *b.total);
    CHECK(*a.subdivision == *b.subdivision);
    CHECK(a.action.generators() == b.action.generators());
    CHECK(a.orbit_map.vertex_map() == b.orbit_map.vertex_map());
    CHECK(a.report == b.report);
}
