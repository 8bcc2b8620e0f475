#pragma once

#include "mpres/complex.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

/**
 * Simplicial mapping cylinder of f : X -> Y.
 *
 * Vertex layout: Y's vertices first, then X's, in their own orders. Each
 * simplex of X is ordered by (f-image, vertex) and contributes the prism
 * pieces {f(x_0..x_i)} ∪ {x_i..x_k}, duplicates collapsed.
 */
struct MappingCylinder {
    ComplexPtr complex;
    SimplicialMap domain_inclusion;
    SimplicialMap codomain_inclusion;
    /// Collapse onto the codomain end: y -> y, x -> f(x).
    SimplicialMap retraction;
};

MappingCylinder mapping_cylinder(const SimplicialMap& f);

/// Mapping cylinder with the domain end coned off by an apex (the last vertex).
struct MappingCone {
    ComplexPtr complex;
    SimplicialMap domain_inclusion;
    SimplicialMap codomain_inclusion;
    Vertex apex = 0;
};

MappingCone mapping_cone(const SimplicialMap& f);

}  // namespace mpres
