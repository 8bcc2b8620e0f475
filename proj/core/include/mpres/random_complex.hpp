#pragma once

#include <cstdint>
#include <random>

#include "mpres/complex.hpp"

namespace mpres {

struct RandomComplexOptions {
    std::size_t min_vertices = 4;
    std::size_t max_vertices = 10;
    /// Reject samples whose mod-p cover would have more sheets than this.
    std::size_t max_sheets = 16;
};

/**
 * Seeded random connected 2-complex: random triangles on a random vertex
 * count, unused vertices and stray components joined to vertex 0 by edges.
 * Samples are redrawn until the sheet cap for `p` holds.
 */
ComplexPtr random_connected_complex(std::mt19937_64& rng, std::uint32_t p, const RandomComplexOptions& options = {});

}  // namespace mpres
