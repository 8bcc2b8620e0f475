#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/group_action.hpp"
#include "mpres/report.hpp"
#include "mpres/resolution.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

struct FiberProduct {
    ComplexPtr complex;
    SimplicialMap to_first;   ///< (x, z) -> x
    SimplicialMap to_second;  ///< (x, z) -> z
    /// Vertex pairs (x, z), in vertex order.
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

/**
 * Simplicial fiber product of f : X -> Y and g : Z -> Y.
 *
 * Vertices are the pairs with f(x) = g(z), ordered lexicographically.
 * Simplices are the chains of pairs, ordered by (image, vertex) on both
 * sides, whose projections are simplices of X and Z (the staircase
 * triangulation; with nondegenerate maps each piece is a single simplex).
 */
FiberProduct fiber_product(const SimplicialMap& f, const SimplicialMap& g);

/// A complex over a coarse base re-triangulated over a finer subdivision.
struct PulledTriangulation {
    ComplexPtr complex;
    SimplicialMap projection;  ///< onto the fine complex
    /// Vertex i is (faces[i], projection(i)): the face of the coarse complex
    /// lying over the carrier of projection(i).
    std::vector<Simplex> faces;
};

/**
 * Pulls the subdivision `fine` of k's codomain back along k. `carriers[y]`
 * is the simplex of k's codomain containing fine vertex y in its interior.
 * k must be nondegenerate.
 */
PulledTriangulation pullback_triangulation(const SimplicialMap& k, ComplexPtr fine,
                                           const std::vector<Simplex>& carriers);

/**
 * Stage i of the pull-back tower.
 *
 * `base` is the current triangulation Y_i of Y, `check_base` the complex the
 * stage's resolution was run on (Y itself for i = 1, the barycentric
 * subdivision of Y_{i-1} afterwards) and `carriers` sends base vertices to
 * check_base simplices. For i >= 2, `refined_previous` is P_{i-1}
 * re-triangulated over Y_i and `bonding` maps P_i onto it.
 */
struct TowerStage {
    std::size_t index = 1;
    std::uint32_t prime = 2;
    ComplexPtr complex;
    ComplexPtr base;
    ComplexPtr check_base;
    std::vector<Simplex> carriers;
    SimplicialMap projection;
    GroupAction action;
    std::vector<std::size_t> generators_per_stage;
    std::optional<PulledTriangulation> refined_previous;
    std::optional<SimplicialMap> bonding;
    /// Base vertices -> simplices of the previous base (i >= 2).
    std::vector<Simplex> previous_carriers;
    VerificationReport report;

    std::size_t total_generators() const noexcept { return action.generator_count(); }
};

/// Stage 1 built from a resolution (or from an identity stage, for controls).
TowerStage stage_from_resolution(const ResolutionStage& stage);

/// Stages 1..depth over Y. Each stage carries its report.
std::vector<TowerStage> build_tower(ComplexPtr y, std::uint32_t p, std::size_t depth);

/**
 * Checks: "epi" (H_1(k^{-1}(∂η)) -> H_1(k^{-1}(η)) injective) for every
 * simplex η of check_base; "vertex_fibers"; "composition" (i >= 2, the
 * refined previous projection after the bonding map equals k_i); "quotient".
 */
VerificationReport verify_tower_stage(const TowerStage& stage);

}  // namespace mpres
