#include "mpres/cylinder.hpp"

#include <algorithm>

namespace mpres {

namespace {

struct Prisms {
    std::vector<Simplex> simplices;
    std::size_t vertex_count = 0;
};

Prisms prisms(const SimplicialMap& f) {
    const SimplicialComplex& x = *f.domain();
    const SimplicialComplex& y = *f.codomain();
    const Vertex shift = static_cast<Vertex>(y.vertex_count());
    Prisms out;
    out.vertex_count = y.vertex_count() + x.vertex_count();
    for (const Simplex& s : y.maximal_simplices()) {
        out.simplices.push_back(s);
    }
    for (Simplex s : x.maximal_simplices()) {
        std::sort(s.begin(), s.end(), [&f](Vertex a, Vertex b) {
            return f(a) != f(b) ? f(a) < f(b) : a < b;
        });
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex piece;
            for (std::size_t j = 0; j <= i; ++j) {
                piece.push_back(f(s[j]));
            }
            for (std::size_t j = i; j < s.size(); ++j) {
                piece.push_back(shift + s[j]);
            }
            std::sort(piece.begin(), piece.end());
            piece.erase(std::unique(piece.begin(), piece.end()), piece.end());
            out.simplices.push_back(std::move(piece));
        }
    }
    return out;
}

std::vector<Vertex> shifted_ids(std::size_t count, Vertex shift) {
    std::vector<Vertex> ids(count);
    for (Vertex v = 0; v < count; ++v) {
        ids[v] = shift + v;
    }
    return ids;
}

}  // namespace

MappingCylinder mapping_cylinder(const SimplicialMap& f) {
    Prisms pr = prisms(f);
    auto cyl = std::make_shared<const SimplicialComplex>(pr.vertex_count, pr.simplices);
    const std::size_t ny = f.codomain()->vertex_count();
    std::vector<Vertex> retraction = shifted_ids(ny, 0);
    retraction.insert(retraction.end(), f.vertex_map().begin(), f.vertex_map().end());
    return MappingCylinder{
        cyl,
        SimplicialMap(f.domain(), cyl, shifted_ids(f.domain()->vertex_count(), static_cast<Vertex>(ny))),
        SimplicialMap(f.codomain(), cyl, shifted_ids(ny, 0)),
        SimplicialMap(cyl, f.codomain(), std::move(retraction)),
    };
}

MappingCone mapping_cone(const SimplicialMap& f) {
    Prisms pr = prisms(f);
    const std::size_t ny = f.codomain()->vertex_count();
    const Vertex apex = static_cast<Vertex>(pr.vertex_count);
    pr.simplices.push_back(Simplex{apex});
    for (Simplex s : f.domain()->maximal_simplices()) {
        for (Vertex& v : s) {
            v += static_cast<Vertex>(ny);
        }
        s.push_back(apex);
        pr.simplices.push_back(std::move(s));
    }
    auto cone = std::make_shared<const SimplicialComplex>(pr.vertex_count + 1, pr.simplices);
    return MappingCone{
        cone,
        SimplicialMap(f.domain(), cone, shifted_ids(f.domain()->vertex_count(), static_cast<Vertex>(ny))),
        SimplicialMap(f.codomain(), cone, shifted_ids(ny, 0)),
        apex,
    };
}

}  // namespace mpres
