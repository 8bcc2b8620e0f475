#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "mpres/errors.hpp"
#include "mpres/group_action.hpp"
#include "mpres/homology.hpp"
#include "mpres/random_complex.hpp"
#include "mpres/simplicial_map.hpp"
#include "mpres/subdivision.hpp"

using namespace mpres;

TEST_CASE("closure_from_maximal counts faces") {
    auto tri = corpus::make({{0, 1, 2}});
    CHECK(tri->total_count() == 7);
    CHECK(tri->dimension() == 2);

    auto circle = corpus::make({{0, 1}, {1, 2}, {0, 2}});
    CHECK(circle->total_count() == 6);
    CHECK(circle->dimension() == 1);

    // 3 + 3 + 1 from the triangle, then vertex 3 and edge 23.
    auto tail = corpus::make({{0, 1, 2}, {2, 3}});
    CHECK(tail->total_count() == 9);

    CHECK_THROWS_AS(corpus::make({{0, 1, 1}}), ValidationError);
    CHECK_THROWS_AS(corpus::make({{}}), ValidationError);
}

TEST_CASE("closure is idempotent and orders maximal simplices") {
    for (const char* name : {"torus7", "rp2", "klein", "tetra_boundary", "theta"}) {
        auto k = corpus::load(name);
        auto again = closure_from_maximal(k->maximal_simplices(), k->labels(), k->name());
        CHECK(*again == *k);
        for (int d = 1; d <= k->dimension(); ++d) {
            for (const Simplex& s : k->simplices(d)) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<long>(drop));
                    CHECK(k->contains(f));
                }
            }
        }
    }
}

TEST_CASE("every vertex must be used") {
    CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}}), ValidationError);
}

TEST_CASE("barycentric subdivision") {
    auto edge = corpus::make({{0, 1}});
    auto sd = barycentric_subdivision(*edge);
    CHECK(sd.complex->vertex_count() == 3);
    CHECK(sd.complex->count(1) == 2);

    auto tri = corpus::make({{0, 1, 2}});
    auto sd2 = barycentric_subdivision(*tri);
    CHECK(sd2.complex->vertex_count() == 7);
    CHECK(sd2.complex->count(2) == 6);
    CHECK(sd2.carriers.back() == Simplex{0, 1, 2});
    CHECK(sd2.carrier_of(Simplex{0, 3, 6}) == Simplex{0, 1, 2});
}

TEST_CASE("star subdivision") {
    auto tri = corpus::make({{0, 1, 2}});
    auto at_face = star_subdivision(*tri, {0, 1, 2});
    CHECK(at_face->vertex_count() == 4);
    CHECK(at_face->count(2) == 3);

    auto at_edge = star_subdivision(*tri, {0, 1});
    CHECK(at_edge->vertex_count() == 4);
    CHECK(at_edge->count(2) == 2);

    CHECK(*star_subdivision(*tri, {1}) == *tri);
    CHECK_THROWS_AS(star_subdivision(*tri, {0, 3}), ValidationError);
}

TEST_CASE("subdivisions preserve Euler characteristic and Betti numbers") {
    std::mt19937_64 rng(11);
    std::vector<ComplexPtr> inputs{corpus::load("torus7"), corpus::load("rp2"), corpus::load("klein")};
    for (int i = 0; i < 6; ++i) {
        inputs.push_back(random_connected_complex(rng, 2));
    }
    for (const auto& k : inputs) {
        auto sd = barycentric_subdivision(*k).complex;
        CHECK(euler_characteristic(*sd) == euler_characteristic(*k));
        const Simplex top = k->maximal_simplices().back();
        auto st = star_subdivision(*k, top);
        CHECK(euler_characteristic(*st) == euler_characteristic(*k));
        for (std::uint32_t p : {2u, 3u}) {
            CHECK(betti_numbers(*sd, p, 2) == betti_numbers(*k, p, 2));
            CHECK(betti_numbers(*st, p, 2) == betti_numbers(*k, p, 2));
        }
    }
}

TEST_CASE("preimage_subcomplex") {
    auto tri = corpus::make({{0, 1, 2}});
    auto boundary = simplex_boundary(*tri, {0, 1, 2});
    auto pre = preimage_subcomplex(SimplicialMap::identity(tri), boundary);
    CHECK(pre.complex->total_count() == 6);
    CHECK(pre.complex->dimension() == 1);

    auto hexagon = corpus::load("cycle6");
    auto triangle = corpus::load("cycle3");
    SimplicialMap cover(hexagon, triangle, {0, 1, 2, 0, 1, 2});
    auto edge = simplex_closure(*triangle, {0, 1});
    auto fiber = preimage_subcomplex(cover, edge);
    CHECK(fiber.complex->vertex_count() == 4);
    CHECK(fiber.complex->count(1) == 2);
    CHECK(connected_components(*fiber.complex).count == 2);
    CHECK(fiber.to_parent == std::vector<Vertex>{0, 1, 3, 4});

    Subcomplex whole{triangle, {0, 1, 2}};
    CHECK(preimage_subcomplex(cover, whole).complex->total_count() == hexagon->total_count());

    Subcomplex bogus{corpus::make({{0, 1, 2}}), {0, 1, 2}};
    CHECK_THROWS_AS(preimage_subcomplex(cover, bogus), ValidationError);
}

TEST_CASE("quotient_by_action") {
    auto tri = corpus::make({{0, 1, 2}});
    auto q = quotient_by_action(GroupAction::trivial(tri, 2));
    CHECK(*q.complex == SimplicialComplex(3, tri->maximal_simplices()));
    CHECK(q.orbit_map.vertex_map() == std::vector<Vertex>{0, 1, 2});

    auto hexagon = corpus::load("cycle6");
    GroupAction half_turn(hexagon, 2, {{3, 4, 5, 0, 1, 2}});
    auto q6 = quotient_by_action(half_turn);
    CHECK(q6.complex->vertex_count() == 3);
    CHECK(q6.complex->count(1) == 3);
    CHECK(q6.orbit_map.vertex_map() == std::vector<Vertex>{0, 1, 2, 0, 1, 2});
    // g followed by the orbit map is the orbit map.
    for (Vertex v = 0; v < 6; ++v) {
        CHECK(q6.orbit_map(half_turn.generator(0)[v]) == q6.orbit_map(v));
    }

    auto edge = corpus::make({{0, 1}});
    CHECK_THROWS_AS(quotient_by_action(GroupAction(edge, 2, {{1, 0}})), ValidationError);
}

TEST_CASE("group actions are validated") {
    auto hexagon = corpus::load("cycle6");
    CHECK_THROWS_AS(GroupAction(hexagon, 4, {}), ValidationError);
    // rotation by one step has order 6
    CHECK_THROWS_AS(GroupAction(hexagon, 2, {{1, 2, 3, 4, 5, 0}}), ValidationError);
    // not a permutation
    CHECK_THROWS_AS(GroupAction(hexagon, 2, {{0, 0, 2, 3, 4, 5}}), ValidationError);
    // reflection through vertices 0 and 3
    GroupAction reflect(hexagon, 2, {{0, 5, 4, 3, 2, 1}});
    CHECK(reflect.fixed_vertices() == std::vector<Vertex>{0, 3});
    // non-commuting pair
    CHECK_THROWS_AS(GroupAction(hexagon, 2, {{0, 5, 4, 3, 2, 1}, {1, 0, 5, 4, 3, 2}}), ValidationError);
}

TEST_CASE("components and Euler characteristic") {
    CHECK(connected_components(*corpus::load("cycle3")).count == 1);
    auto two = corpus::make({{0, 1, 2}, {3, 4, 5}});
    auto c = connected_components(*two);
    CHECK(c.count == 2);
    CHECK(c.labels == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
    CHECK(connected_components(*corpus::load("cycle6")).count == 1);

    CHECK(euler_characteristic(*corpus::make({{0, 1, 2}})) == 1);
    CHECK(euler_characteristic(*corpus::load("tetra_boundary")) == 2);
    auto torus = corpus::load("torus7");
    CHECK(torus->vertex_count() == 7);
    CHECK(torus->count(1) == 21);
    CHECK(torus->count(2) == 14);
    CHECK(euler_characteristic(*torus) == 0);
}

TEST_CASE("simplicial maps") {
    auto tri = corpus::make({{0, 1, 2}});
    auto circle = corpus::load("cycle3");
    CHECK_THROWS_AS(SimplicialMap(tri, circle, {0, 1, 2}), ValidationError);
    auto point = corpus::make({{0}});
    SimplicialMap collapse(tri, point, {0, 0, 0});
    CHECK_FALSE(collapse.nondegenerate());
    CHECK(collapse.image({0, 1, 2}) == Simplex{0});
    SimplicialMap id = SimplicialMap::identity(tri);
    CHECK(id.nondegenerate());
    CHECK(is_isomorphism(id));
    CHECK(compose(collapse, id).vertex_map() == collapse.vertex_map());
    CHECK_THROWS_AS(compose(id, collapse), ValidationError);
}
