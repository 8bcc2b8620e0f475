#include "mpres/simplicial_map.hpp"

#include <algorithm>
#include <unordered_set>

#include "mpres/errors.hpp"

namespace mpres {

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<Vertex> vertex_map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), vertex_map_(std::move(vertex_map)) {
    if (!domain_ || !codomain_) {
        throw ValidationError("simplicial map needs a domain and a codomain");
    }
    if (vertex_map_.size() != domain_->vertex_count()) {
        throw ValidationError("vertex map has " + std::to_string(vertex_map_.size()) +
                              " entries for a domain with " + std::to_string(domain_->vertex_count()) +
                              " vertices");
    }
    for (Vertex w : vertex_map_) {
        if (w >= codomain_->vertex_count()) {
            throw ValidationError("vertex map entry " + std::to_string(w) + " outside the codomain");
        }
    }
    // Checking the maximal simplices suffices: faces of an image simplex are simplices.
    for (const Simplex& s : domain_->maximal_simplices()) {
        Simplex img = image(s);
        if (img.size() != s.size()) {
            nondegenerate_ = false;
        }
        if (!codomain_->contains(img)) {
            throw ValidationError("image of " + domain_->simplex_label(s) + " is not a simplex of the codomain");
        }
    }
}

SimplicialMap SimplicialMap::identity(ComplexPtr k) {
    std::vector<Vertex> ids(k->vertex_count());
    for (Vertex v = 0; v < ids.size(); ++v) {
        ids[v] = v;
    }
    return SimplicialMap(k, k, std::move(ids));
}

SimplicialMap SimplicialMap::inclusion(const Subcomplex& sub, ComplexPtr parent) {
    return SimplicialMap(sub.complex, std::move(parent), sub.to_parent);
}

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (Vertex v : s) {
        img.push_back(vertex_map_[v]);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

bool SimplicialMap::injective_on_vertices() const {
    std::vector<char> hit(codomain_->vertex_count(), 0);
    for (Vertex w : vertex_map_) {
        if (hit[w]) {
            return false;
        }
        hit[w] = 1;
    }
    return true;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    return a == b || (a && b && *a == *b);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!same_complex(f.codomain(), g.domain())) {
        throw ValidationError("cannot compose: codomain and domain differ");
    }
    std::vector<Vertex> vm(f.vertex_map().size());
    for (std::size_t v = 0; v < vm.size(); ++v) {
        vm[v] = g(f(static_cast<Vertex>(v)));
    }
    return SimplicialMap(f.domain(), g.codomain(), std::move(vm));
}

SimplicialMap subcomplex_inclusion(const Subcomplex& small, const Subcomplex& big) {
    std::vector<Vertex> vm(small.to_parent.size());
    for (std::size_t i = 0; i < vm.size(); ++i) {
        auto it = std::lower_bound(big.to_parent.begin(), big.to_parent.end(), small.to_parent[i]);
        if (it == big.to_parent.end() || *it != small.to_parent[i]) {
            throw ValidationError("subcomplex is not contained in the larger subcomplex");
        }
        vm[i] = static_cast<Vertex>(it - big.to_parent.begin());
    }
    return SimplicialMap(small.complex, big.complex, std::move(vm));
}

Subcomplex preimage_subcomplex(const SimplicialMap& f, const Subcomplex& target) {
    const SimplicialComplex& cod = *f.codomain();
    std::unordered_set<Simplex, SimplexHash> allowed;
    for (int d = 0; d <= target.complex->dimension(); ++d) {
        for (const Simplex& s : target.complex->simplices(d)) {
            Simplex up;
            up.reserve(s.size());
            for (Vertex v : s) {
                if (v >= target.to_parent.size() || target.to_parent[v] >= cod.vertex_count()) {
                    throw ValidationError("target is not a subcomplex of the codomain");
                }
                up.push_back(target.to_parent[v]);
            }
            std::sort(up.begin(), up.end());
            if (!cod.contains(up)) {
                throw ValidationError("target simplex " + cod.simplex_label(up) + " is not in the codomain");
            }
            allowed.insert(std::move(up));
        }
    }
    return filter_subcomplex(*f.domain(), [&](const Simplex& s) { return allowed.count(f.image(s)) > 0; });
}

bool is_isomorphism(const SimplicialMap& f) {
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    if (dom.vertex_count() != cod.vertex_count() || !f.injective_on_vertices()) {
        return false;
    }
    if (dom.dimension() != cod.dimension()) {
        return false;
    }
    for (int d = 0; d <= dom.dimension(); ++d) {
        if (dom.count(d) != cod.count(d)) {
            return false;
        }
    }
    // Vertex-injective and simplicial, so simplices map injectively; equal counts give bijectivity.
    return true;
}

}  // namespace mpres
