#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/fp_matrix.hpp"
#include "mpres/simplicial_map.hpp"

namespace mpres {

/// Matrix of ∂_k in the lexicographic simplex bases, signs (-1)^i reduced mod p.
/// Requires 1 <= k <= dim K.
FpMatrix boundary_matrix(const SimplicialComplex& k, int dim, std::uint32_t p);

/// Chain-level matrix of f in dimension k; degenerate images contribute 0.
FpMatrix chain_map(const SimplicialMap& f, int k, std::uint32_t p);

struct HomologyBasis {
    int dimension = 0;
    std::uint32_t prime = 2;
    std::size_t rank = 0;
    /// Cycle representatives in the k-simplex basis, independent modulo boundaries.
    std::vector<FpVector> cycles;
    /// Basis of im ∂_{k+1}.
    std::vector<FpVector> boundaries;
    /// Length of the chain vectors (number of k-simplices).
    std::size_t chain_dimension = 0;
};

/// H_k(K; F_p). `reduced` only affects k = 0.
HomologyBasis homology_basis(const SimplicialComplex& k, int dim, std::uint32_t p, bool reduced = false);

/// Betti numbers b_0..b_{max_dim}.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, std::uint32_t p, int max_dim,
                                       bool reduced = false);

/// Matrix of f_* : H_k(domain) -> H_k(codomain) in the homology_basis bases.
FpMatrix induced_map_on_homology(const SimplicialMap& f, int k, std::uint32_t p, bool reduced = false);

/// Same, reusing precomputed bases.
FpMatrix induced_map_on_homology(const SimplicialMap& f, const HomologyBasis& source,
                                 const HomologyBasis& target);

enum class Classification { iso, mono, epi, neither };

std::string_view to_string(Classification c) noexcept;

struct Restriction {
    Classification classification = Classification::neither;
    FpMatrix matrix{2, 0, 0};
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::size_t map_rank = 0;
};

Classification classify(std::size_t source_rank, std::size_t target_rank, std::size_t map_rank) noexcept;

/**
 * Classifies the map on H_k induced by a subcomplex inclusion. Surjectivity
 * of the H^k restriction is the transpose statement of injectivity here.
 * Throws ValidationError if the map is not injective on vertices.
 */
Restriction restriction_classification(const SimplicialMap& inclusion, int k, std::uint32_t p);

}  // namespace mpres
