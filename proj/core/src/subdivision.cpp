#include "mpres/subdivision.hpp"

#include <algorithm>
#include <numeric>

#include "mpres/errors.hpp"

namespace mpres {

const Simplex& BarycentricSubdivision::carrier_of(const Simplex& chain) const {
    if (chain.empty()) {
        throw ValidationError("empty chain has no carrier");
    }
    // Vertices are sorted by dimension first, so the largest id is the top of the chain.
    return carriers.at(chain.back());
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
    BarycentricSubdivision out;
    std::vector<std::size_t> offset(static_cast<std::size_t>(std::max(k.dimension(), 0)) + 1, 0);
    for (int d = 0; d <= k.dimension(); ++d) {
        if (d > 0) {
            offset[static_cast<std::size_t>(d)] = offset[static_cast<std::size_t>(d) - 1] + k.count(d - 1);
        }
        for (const Simplex& s : k.simplices(d)) {
            out.carriers.push_back(s);
        }
    }
    auto vertex_of = [&](const Simplex& s) {
        return static_cast<Vertex>(offset[s.size() - 1] + *k.index_of(s));
    };

    // Full flags of each maximal simplex, one per vertex ordering.
    std::vector<Simplex> flags;
    for (const Simplex& top : k.maximal_simplices()) {
        std::vector<Vertex> order = top;
        do {
            Simplex chain;
            Simplex face;
            for (Vertex v : order) {
                face.insert(std::upper_bound(face.begin(), face.end(), v), v);
                chain.push_back(vertex_of(face));
            }
            std::sort(chain.begin(), chain.end());
            flags.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.complex = std::make_shared<const SimplicialComplex>(out.carriers.size(), flags);
    return out;
}

ComplexPtr star_subdivision(const SimplicialComplex& k, const Simplex& s) {
    if (s.empty() || !k.contains(s)) {
        throw ValidationError("cannot star at a simplex that is not in the complex");
    }
    if (s.size() == 1) {
        // Starring at a vertex changes nothing.
        return std::make_shared<const SimplicialComplex>(k);
    }
    const Vertex apex = static_cast<Vertex>(k.vertex_count());
    std::vector<Simplex> simplices;
    for (const Simplex& top : k.maximal_simplices()) {
        if (!is_face(s, top)) {
            simplices.push_back(top);
            continue;
        }
        // Replace top by the cone from the apex over the faces of top not containing s.
        for (Vertex drop : s) {
            Simplex piece;
            for (Vertex v : top) {
                if (v != drop) {
                    piece.push_back(v);
                }
            }
            piece.push_back(apex);
            simplices.push_back(std::move(piece));
        }
    }
    std::vector<std::string> labels;
    if (!k.labels().empty()) {
        labels = k.labels();
        labels.push_back("b" + k.simplex_label(s));
    }
    return std::make_shared<const SimplicialComplex>(k.vertex_count() + 1, simplices, std::move(labels));
}

}  // namespace mpres
