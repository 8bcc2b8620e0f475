#include "mpres/random_complex.hpp"

#include <algorithm>
#include <string>

#include "mpres/errors.hpp"
#include "mpres/homology.hpp"

namespace mpres {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ComplexPtr draw(std::mt19937_64& rng, const RandomComplexOptions& options) {
    const std::size_t n = uniform(rng, options.min_vertices, options.max_vertices);
    const std::size_t triangles = uniform(rng, 1, 2 * n);
    std::vector<Simplex> simplices;
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) {
        all[v] = v;
    }
    for (std::size_t t = 0; t < triangles; ++t) {
        std::shuffle(all.begin(), all.end(), rng);
        simplices.push_back(make_simplex({all[0], all[1], all[2]}));
    }
    for (Vertex v = 0; v < n; ++v) {
        simplices.push_back(Simplex{v});
    }
    // Join every component to the one holding vertex 0.
    for (;;) {
        SimplicialComplex k(n, simplices);
        Components c = connected_components(k);
        if (c.count == 1) {
            break;
        }
        std::vector<Vertex> inside, outside;
        for (Vertex v = 0; v < n; ++v) {
            (c.labels[v] == c.labels[0] ? inside : outside).push_back(v);
        }
        simplices.push_back(make_simplex({inside[uniform(rng, 0, inside.size() - 1)],
                                          outside[uniform(rng, 0, outside.size() - 1)]}));
    }
    return std::make_shared<const SimplicialComplex>(n, simplices, std::vector<std::string>{},
                                                     "random");
}

}  // namespace

ComplexPtr random_connected_complex(std::mt19937_64& rng, std::uint32_t p, const RandomComplexOptions& options) {
    if (options.min_vertices < 3 || options.min_vertices > options.max_vertices) {
        throw ValidationError("random complexes need 3 <= min_vertices <= max_vertices");
    }
    for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
        ComplexPtr k = draw(rng, options);
        std::size_t l = homology_basis(*k, 1, p).rank;
        std::size_t sheets = 1;
        for (std::size_t i = 0; i < l && sheets <= options.max_sheets; ++i) {
            sheets *= p;
        }
        if (sheets <= options.max_sheets) {
            return k;
        }
    }
    throw InternalError("no random complex met the sheet cap");
}

}  // namespace mpres
