#pragma once

#include <vector>

#include "mpres/complex.hpp"

namespace mpres {

/// Barycentric subdivision. Vertex i of the result is the barycenter of
/// carriers[i], a simplex of the original; vertices are ordered by
/// (dimension, lexicographic) of their simplices.
struct BarycentricSubdivision {
    ComplexPtr complex;
    std::vector<Simplex> carriers;

    /// The simplex of the original complex carrying a chain: its largest element.
    const Simplex& carrier_of(const Simplex& chain) const;
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k);

/// Stellar subdivision at the barycenter of `s`, which becomes the new last
/// vertex; starring at a vertex returns a copy of `k`. Throws ValidationError if `s` is not a simplex of `k`.
ComplexPtr star_subdivision(const SimplicialComplex& k, const Simplex& s);

}  // namespace mpres
