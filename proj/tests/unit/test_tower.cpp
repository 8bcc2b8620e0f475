#include "corpus.hpp"
#include "doctest.h"
#include "mpres/cover.hpp"
#include "mpres/errors.hpp"
#include "mpres/homology.hpp"
#include "mpres/tower.hpp"

using namespace mpres;

TEST_CASE("pullback along the identity copies the other side") {
    auto torus = corpus::load("torus7");
    Cover c = build_cover(torus, 2);
    FiberProduct fp = fiber_product(SimplicialMap::identity(torus), c.projection);
    CHECK(fp.complex->vertex_count() == c.total->vertex_count());
    for (int d = 0; d <= 2; ++d) {
        CHECK(fp.complex->count(d) == c.total->count(d));
    }
    CHECK(is_isomorphism(fp.to_second));
}

TEST_CASE("two double covers of the triangle boundary") {
    auto circle = corpus::load("cycle3");
    SimplicialMap f(corpus::load("cycle6"), circle, {0, 1, 2, 0, 1, 2});
    FiberProduct fp = fiber_product(f, f);
    CHECK(fp.complex->vertex_count() == 12);
    Components c = connected_components(*fp.complex);
    CHECK(c.count == 2);
    for (std::size_t label = 0; label < 2; ++label) {
        auto part = filter_subcomplex(*fp.complex, [&](const Simplex& s) { return c.labels[s[0]] == label; });
        CHECK(part.complex->vertex_count() == 6);
        CHECK(part.complex->count(1) == 6);
        CHECK(betti_numbers(*part.complex, 2, 1) == std::vector<std::size_t>{1, 1});
    }
}

TEST_CASE("two edges over a point give a triangulated square") {
    auto edge = corpus::make({{0, 1}});
    auto point = corpus::make({{0}});
    SimplicialMap f(edge, point, {0, 0});
    FiberProduct fp = fiber_product(f, f);
    CHECK(fp.complex->vertex_count() == 4);
    CHECK(fp.complex->count(2) == 2);
    CHECK(euler_characteristic(*fp.complex) == 1);
    CHECK(betti_numbers(*fp.complex, 2, 2, true) == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("fiber product squares commute and fibers multiply") {
    auto theta = corpus::load("theta");
    Cover a = build_cover(theta, 2);
    auto torus = corpus::load("torus7");
    Cover b = build_cover(torus, 3);
    for (auto [f, g] : {std::pair{a.projection, a.projection}, std::pair{b.projection, b.projection}}) {
        FiberProduct fp = fiber_product(f, g);
        CHECK(compose(f, fp.to_first).vertex_map() == compose(g, fp.to_second).vertex_map());
        const std::size_t ny = f.codomain()->vertex_count();
        std::vector<std::size_t> nf(ny), ng(ny), nfp(ny);
        for (Vertex v = 0; v < f.domain()->vertex_count(); ++v) ++nf[f(v)];
        for (Vertex v = 0; v < g.domain()->vertex_count(); ++v) ++ng[g(v)];
        for (Vertex v = 0; v < fp.complex->vertex_count(); ++v) ++nfp[f(fp.to_first(v))];
        for (std::size_t y = 0; y < ny; ++y) {
            CHECK(nfp[y] == nf[y] * ng[y]);
        }
        // p^a sheets times p^b sheets
        const long long sheets = static_cast<long long>(nf[0] * ng[0]);
        CHECK(euler_characteristic(*fp.complex) == sheets * euler_characteristic(*f.codomain()));
    }
}

TEST_CASE("universal property at the vertex level") {
    auto circle = corpus::load("cycle3");
    SimplicialMap f(corpus::load("cycle6"), circle, {0, 1, 2, 0, 1, 2});
    FiberProduct fp = fiber_product(f, f);
    // the diagonal hexagon -> fp factors through vertex pairs
    std::vector<Vertex> diagonal;
    for (Vertex v = 0; v < 6; ++v) {
        auto it = std::find(fp.pairs.begin(), fp.pairs.end(), std::pair<Vertex, Vertex>{v, v});
        REQUIRE(it != fp.pairs.end());
        diagonal.push_back(static_cast<Vertex>(it - fp.pairs.begin()));
    }
    SimplicialMap d(f.domain(), fp.complex, diagonal);
    CHECK(compose(fp.to_first, d).vertex_map() == SimplicialMap::identity(f.domain()).vertex_map());
}

TEST_CASE("fiber product needs a common codomain") {
    auto circle = corpus::load("cycle3");
    auto tri = corpus::load("triangle");
    CHECK_THROWS_AS(fiber_product(SimplicialMap::identity(circle), SimplicialMap::identity(tri)), ValidationError);
}

TEST_CASE("depth one towers") {
    auto circle = corpus::load("cycle3");
    auto towers = build_tower(circle, 2, 1);
    REQUIRE(towers.size() == 1);
    CHECK(towers[0].total_generators() == 0);
    CHECK(towers[0].projection.vertex_map() == std::vector<Vertex>{0, 1, 2});
    CHECK(towers[0].report.passed());

    auto tri = corpus::load("triangle");
    auto t = build_tower(tri, 2, 1);
    ResolutionStage r = resolve(tri, 2);
    CHECK(*t[0].complex == *r.total);
    CHECK(t[0].action.generators() == r.action.generators());
    CHECK(t[0].report.passed());
    CHECK(t[0].report.named("epi").size() == 7);

    CHECK_THROWS_AS(build_tower(tri, 2, 0), ValidationError);
}

TEST_CASE("depth two tower over the triangle") {
    auto tri = corpus::load("triangle");
    auto t = build_tower(tri, 2, 2);
    REQUIRE(t.size() == 2);
    const TowerStage& s = t[1];
    CHECK(s.generators_per_stage.size() == 2);
    CHECK(s.generators_per_stage[0] == 1);
    CHECK(s.total_generators() == s.generators_per_stage[0] + s.generators_per_stage[1]);
    CHECK(s.report.passed());
    REQUIRE(s.report.named("composition").size() == 1);
    CHECK(s.report.named("composition")[0].passed);
    CHECK(s.report.named("epi").size() == s.check_base->total_count());
    // the refined previous stage is a subdivision of P_1
    CHECK(euler_characteristic(*s.refined_previous->complex) == euler_characteristic(*t[0].complex));
    for (int k = 0; k <= 2; ++k) {
        CHECK(homology_basis(*s.refined_previous->complex, k, 2).rank == homology_basis(*t[0].complex, k, 2).rank);
    }
}

TEST_CASE("identity tower stage fails the epi check at the 2-simplex only") {
    TowerStage s = stage_from_resolution(identity_stage(corpus::load("triangle"), 2));
    auto failures = s.report.failures();
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].name == "epi");
    CHECK(failures[0].subject == "[0,1,2]");
}
