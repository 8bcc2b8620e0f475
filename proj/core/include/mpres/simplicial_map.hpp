#pragma once

#include <vector>

#include "mpres/complex.hpp"

namespace mpres {

/**
 * Vertex assignment carrying every simplex of the domain onto a simplex of
 * the codomain. Validated on construction.
 */
class SimplicialMap {
public:
    SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<Vertex> vertex_map);

    static SimplicialMap identity(ComplexPtr k);
    static SimplicialMap inclusion(const Subcomplex& sub, ComplexPtr parent);

    const ComplexPtr& domain() const noexcept { return domain_; }
    const ComplexPtr& codomain() const noexcept { return codomain_; }
    const std::vector<Vertex>& vertex_map() const noexcept { return vertex_map_; }
    Vertex operator()(Vertex v) const { return vertex_map_[v]; }

    /// Image vertex set, duplicates collapsed.
    Simplex image(const Simplex& s) const;

    /// Injective on the vertices of every simplex.
    bool nondegenerate() const noexcept { return nondegenerate_; }
    bool injective_on_vertices() const;

private:
    ComplexPtr domain_;
    ComplexPtr codomain_;
    std::vector<Vertex> vertex_map_;
    bool nondegenerate_ = true;
};

/// g ∘ f. The codomain of f must equal the domain of g.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Inclusion between two subcomplexes of the same parent, small ⊆ big.
SimplicialMap subcomplex_inclusion(const Subcomplex& small, const Subcomplex& big);

/// Largest subcomplex of f's domain mapped into `target` (a subcomplex of
/// f's codomain). Throws if `target` is not a subcomplex of the codomain.
Subcomplex preimage_subcomplex(const SimplicialMap& f, const Subcomplex& target);

/// Bijective on vertices and on simplices.
bool is_isomorphism(const SimplicialMap& f);

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

}  // namespace mpres
