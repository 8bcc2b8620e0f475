#include "mpres/homology.hpp"

#include <algorithm>
#include <string>

#include "mpres/errors.hpp"

namespace mpres {

namespace {

// ∂_k with the conventions: k = 0 is the zero map to the empty space (or the
// augmentation when reduced); k > dim gives a map from the zero space.
FpMatrix boundary_any(const SimplicialComplex& k, int dim, std::uint32_t p, bool reduced) {
    if (dim == 0) {
        FpMatrix m(p, reduced && k.count(0) > 0 ? 1 : 0, k.count(0));
        if (m.rows() == 1) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                m.set(0, c, 1);
            }
        }
        return m;
    }
    FpMatrix m(p, k.count(dim - 1), k.count(dim));
    auto level = k.simplices(dim);
    for (std::size_t c = 0; c < level.size(); ++c) {
        const Simplex& s = level[c];
        Simplex facet(s.size() - 1);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != skip) {
                    facet[j++] = s[i];
                }
            }
            m.set(*k.index_of(facet), c, skip % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

}  // namespace

FpMatrix boundary_matrix(const SimplicialComplex& k, int dim, std::uint32_t p) {
    if (dim < 1 || dim > k.dimension()) {
        throw ValidationError("boundary dimension " + std::to_string(dim) + " out of range 1.." +
                              std::to_string(k.dimension()));
    }
    return boundary_any(k, dim, p, false);
}

FpMatrix chain_map(const SimplicialMap& f, int k, std::uint32_t p) {
    const SimplicialComplex& dom = *f.domain();
    const SimplicialComplex& cod = *f.codomain();
    FpMatrix m(p, cod.count(k), dom.count(k));
    auto level = dom.simplices(k);
    std::vector<Vertex> img;
    for (std::size_t c = 0; c < level.size(); ++c) {
        img.clear();
        for (Vertex v : level[c]) {
            img.push_back(f(v));
        }
        // Sign of the sorting permutation, by counting inversions.
        int inversions = 0;
        bool degenerate = false;
        for (std::size_t i = 0; i < img.size() && !degenerate; ++i) {
            for (std::size_t j = i + 1; j < img.size(); ++j) {
                if (img[i] == img[j]) {
                    degenerate = true;
                    break;
                }
                if (img[i] > img[j]) {
                    ++inversions;
                }
            }
        }
        if (degenerate) {
            continue;
        }
        Simplex sorted(img.begin(), img.end());
        std::sort(sorted.begin(), sorted.end());
        m.set(*cod.index_of(sorted), c, inversions % 2 == 0 ? 1 : -1);
    }
    return m;
}

HomologyBasis homology_basis(const SimplicialComplex& k, int dim, std::uint32_t p, bool reduced) {
    if (dim < 0) {
        throw ValidationError("negative homology dimension");
    }
    HomologyBasis h;
    h.dimension = dim;
    h.prime = p;
    h.chain_dimension = k.count(dim);
    if (h.chain_dimension == 0) {
        return h;
    }
    std::vector<FpVector> cycles = kernel_basis(boundary_any(k, dim, p, reduced));
    h.boundaries = column_space_basis(boundary_any(k, dim + 1, p, reduced));
    if (cycles.size() == h.boundaries.size()) {
        return h;
    }
    // Representatives: cycle vectors that are pivots after the boundary block.
    std::vector<FpVector> columns = h.boundaries;
    columns.insert(columns.end(), cycles.begin(), cycles.end());
    RowReduction red = rref_rank(FpMatrix::from_columns(p, h.chain_dimension, columns));
    for (std::size_t c : red.pivot_columns) {
        if (c >= h.boundaries.size()) {
            h.cycles.push_back(cycles[c - h.boundaries.size()]);
        }
    }
    h.rank = h.cycles.size();
    if (h.rank + h.boundaries.size() != cycles.size()) {
        throw InternalError("boundaries are not contained in cycles");
    }
    return h;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, std::uint32_t p, int max_dim, bool reduced) {
    // Ranks only: b_k = n_k - rank ∂_k - rank ∂_{k+1}.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_dim) + 2, 0);
    for (int d = 0; d <= max_dim + 1; ++d) {
        if (d == 0 || k.count(d) > 0) {
            ranks[static_cast<std::size_t>(d)] = rank(boundary_any(k, d, p, reduced));
        }
    }
    std::vector<std::size_t> betti;
    for (int d = 0; d <= max_dim; ++d) {
        betti.push_back(k.count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
    }
    return betti;
}

FpMatrix induced_map_on_homology(const SimplicialMap& f, const HomologyBasis& source, const HomologyBasis& target) {
    const std::uint32_t p = source.prime;
    FpMatrix result(p, target.rank, source.rank);
    if (source.rank == 0 || target.rank == 0) {
        return result;
    }
    FpMatrix chains = chain_map(f, source.dimension, p);
    std::vector<FpVector> images;
    images.reserve(source.rank);
    for (const FpVector& z : source.cycles) {
        images.push_back(chains.apply(z));
    }
    return coordinates_in_quotient(p, target.chain_dimension, images, target.boundaries, target.cycles);
}

FpMatrix induced_map_on_homology(const SimplicialMap& f, int k, std::uint32_t p, bool reduced) {
    HomologyBasis source = homology_basis(*f.domain(), k, p, reduced);
    HomologyBasis target = homology_basis(*f.codomain(), k, p, reduced);
    return induced_map_on_homology(f, source, target);
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::iso: return "iso";
        case Classification::mono: return "mono";
        case Classification::epi: return "epi";
        case Classification::neither: return "neither";
    }
    return "neither";
}

Classification classify(std::size_t source_rank, std::size_t target_rank, std::size_t map_rank) noexcept {
    const bool mono = map_rank == source_rank;
    const bool epi = map_rank == target_rank;
    if (mono && epi) {
        return Classification::iso;
    }
    if (mono) {
        return Classification::mono;
    }
    if (epi) {
        return Classification::epi;
    }
    return Classification::neither;
}

Restriction restriction_classification(const SimplicialMap& inclusion, int k, std::uint32_t p) {
    if (!inclusion.injective_on_vertices()) {
        throw ValidationError("restriction_classification needs a subcomplex inclusion");
    }
    Restriction r;
    r.matrix = induced_map_on_homology(inclusion, k, p);
    r.source_rank = r.matrix.cols();
    r.target_rank = r.matrix.rows();
    r.map_rank = rank(r.matrix);
    r.classification = classify(r.source_rank, r.target_rank, r.map_rank);
    return r;
}

}  // namespace mpres
