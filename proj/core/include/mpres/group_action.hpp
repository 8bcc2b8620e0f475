#pragma once

#include <cstdint>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

using Permutation = std::vector<Vertex>;

/**
 * Simplicial action of (Z_p)^m given by m commuting generators, each a
 * simplicial automorphism whose order divides p. Validated on construction.
 */
class GroupAction {
public:
    GroupAction(ComplexPtr complex, std::uint32_t p, std::vector<Permutation> generators);

    /// The trivial action (m = 0).
    static GroupAction trivial(ComplexPtr complex, std::uint32_t p);

    const ComplexPtr& complex() const noexcept { return complex_; }
    std::uint32_t prime() const noexcept { return p_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const Permutation& generator(std::size_t i) const { return generators_.at(i); }

    /// Vertices fixed by every generator, ascending.
    std::vector<Vertex> fixed_vertices() const;

    SimplicialMap generator_map(std::size_t i) const;

private:
    ComplexPtr complex_;
    std::uint32_t p_;
    std::vector<Permutation> generators_;
};

struct Quotient {
    ComplexPtr complex;
    SimplicialMap orbit_map;
};

/**
 * Orbit complex of an action. Orbits are numbered by their least vertex.
 * Throws ValidationError when a simplex degenerates in the quotient or two
 * simplices from different orbits share an image; subdividing
 * (barycentrically) before quotienting removes both defects.
 */
Quotient quotient_by_action(const GroupAction& action);

/**
 * Checks that `f` is constant on orbits and induces an isomorphism from the
 * orbit complex onto f's codomain. Returns false on any mismatch.
 */
bool quotient_matches(const GroupAction& action, const SimplicialMap& f);

}  // namespace mpres
