#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/fp_matrix.hpp"
#include "mpres/group_action.hpp"
#include "mpres/report.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

/**
 * Edge cochain with values in F_p^l realizing the mod-p Hurewicz map
 * pi_1(L) -> H_1(L; F_p) = F_p^l on edge paths. Tree edges carry 0; each
 * non-tree edge carries the coordinates of its fundamental cycle.
 */
struct VoltageAssignment {
    ComplexPtr base;
    std::uint32_t prime = 2;
    std::size_t rank = 0;  ///< l = dim H_1(base; F_p)
    std::vector<std::size_t> tree_edges;  ///< indices into base->simplices(1)
    std::vector<FpVector> voltages;       ///< per edge, oriented from low to high vertex

    /// Voltage of the edge traversed from `from` to `to`.
    FpVector oriented(Vertex from, Vertex to) const;
};

VoltageAssignment voltage_assignment(ComplexPtr base, std::uint32_t p);

/// Regular Z_p^l cover classified by the kernel of the voltage map.
struct Cover {
    ComplexPtr base;
    ComplexPtr total;
    std::uint32_t prime = 2;
    std::size_t rank = 0;         ///< l
    std::size_t sheet_count = 1;  ///< p^l
    SimplicialMap projection;
    GroupAction deck;
    VoltageAssignment voltage;

    /// Total-space vertex over `v` on sheet `sheet` (sheet coordinates in F_p^l).
    Vertex vertex(Vertex v, const FpVector& sheet) const;
    /// Inverse of vertex().
    std::pair<Vertex, FpVector> decode(Vertex x) const;
};

/// Vertices of the total space are (v, a) for a ∈ F_p^l, ordered
/// lexicographically with v major.
Cover build_cover(ComplexPtr base, std::uint32_t p);

/**
 * Lifts an action on the base to the total space. Requires a vertex fixed by
 * every generator and a trivial action on H_1(base; F_p); each generator is
 * lifted to the unique automorphism over it fixing (x0, 0), x0 the least
 * common fixed vertex. Throws HypothesisError when a hypothesis fails.
 */
GroupAction lift_action(const Cover& cover, const GroupAction& action);

/**
 * Cover checks under `subject`: "sheets" (p^l sheets, l = rank H_1 of the
 * base), "euler" (χ(total) = p^l χ(base)), "zero_map" (the projection is
 * zero on H_1) and "deck_quotient" (total / deck = base via the projection).
 */
VerificationReport verify_cover(const Cover& cover, const std::string& subject);

}  // namespace mpres
