#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/cover.hpp"
#include "mpres/group_action.hpp"
#include "mpres/report.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

/// Bookkeeping for one resolved simplex Δ of dimension >= 2.
struct ResolvedSimplex {
    Simplex simplex;                       ///< Δ, in the base
    std::size_t rank = 0;                  ///< l_Δ, generators contributed
    std::size_t first_generator = 0;       ///< index of the first of them
    std::vector<Vertex> boundary_vertices; ///< f^{-1}(∂Δ) in the total complex
    std::vector<Vertex> cover_vertices;    ///< cover vertices in the total complex, cover order
    Vertex apex = 0;                       ///< cone point in the total complex
    Vertex barycenter = 0;                 ///< image of the apex in the subdivision
    std::shared_ptr<const Cover> cover;    ///< cover of f^{-1}(∂Δ), in its own numbering
};

/**
 * An equivariant resolution f : T -> B of a base complex L.
 *
 * B subdivides L: every vertex of B carries the simplex of L whose interior
 * contains it. A (Z_p)^m action on T has orbit map f.
 */
struct ResolutionStage {
    std::uint32_t prime = 2;
    ComplexPtr base;
    ComplexPtr subdivision;
    std::vector<Simplex> carriers;
    ComplexPtr total;
    GroupAction action;
    SimplicialMap orbit_map;
    std::vector<ResolvedSimplex> pieces;
    VerificationReport report;

    std::size_t generator_count() const noexcept { return action.generator_count(); }
};

/**
 * Inductive resolution over skeleta. Dimensions <= 1 are copied. Each
 * n-simplex Δ (canonical order) gets the mod-p cover of f^{-1}(∂Δ), the lift
 * of the existing action, and the mapping cone of the cover projection; the
 * cone point sits over the barycenter of Δ, which is subdivided as the cone
 * over a collar of its subdivided boundary. The report is filled in.
 */
ResolutionStage resolve(ComplexPtr base, std::uint32_t p);

/// The unresolved stage: T = B = L, trivial action, identity orbit map.
ResolutionStage identity_stage(ComplexPtr base, std::uint32_t p);

/**
 * Checks, in order: "star" (H_1 iso f^{-1}(∂σ) -> f^{-1}(σ)) for every
 * simplex σ of the base; "skeleton_embedding"; "skeleton_h1" (H_1 iso from
 * f^{-1}(L^(1)) into T); "quotient"; "fixed_skeleton".
 */
VerificationReport verify_resolution(const ResolutionStage& stage);

/**
 * Preimage under f of the part of the subdivision lying in σ (or in ∂σ when
 * `boundary_only`): simplices whose vertices' carriers, united, lie in σ.
 */
Subcomplex carrier_preimage(const SimplicialMap& f, const std::vector<Simplex>& carriers, const Simplex& sigma,
                            bool boundary_only);

struct MayerVietoris {
    std::size_t direct = 0;     ///< rank H_1(T)
    std::size_t predicted = 0;  ///< coker(H_1 of the overlap) + ker(reduced H_0 of the overlap)
    std::size_t skeleton = 0;   ///< rank H_1(L^(1))
};

/// Mayer–Vietoris bookkeeping for L = N ∪ Δ, Δ maximal and N the closure of
/// the remaining maximal simplices (which must be nonempty).
MayerVietoris mayer_vietoris_ranks(const ResolutionStage& stage, const Simplex& top);

}  // namespace mpres
