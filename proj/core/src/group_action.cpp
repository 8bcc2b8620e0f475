#include "mpres/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "mpres/errors.hpp"
#include "mpres/fp_matrix.hpp"

namespace mpres {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Keeps the smaller index as root.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

Simplex apply(const Permutation& g, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) {
        out.push_back(g[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GroupAction::GroupAction(ComplexPtr complex, std::uint32_t p, std::vector<Permutation> generators)
    : complex_(std::move(complex)), p_(p), generators_(std::move(generators)) {
    if (!is_prime(p_)) {
        throw ValidationError(std::to_string(p_) + " is not prime");
    }
    const std::size_t n = complex_->vertex_count();
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
        const Permutation& g = generators_[gi];
        if (g.size() != n) {
            throw ValidationError("generator " + std::to_string(gi) + " has the wrong length");
        }
        std::vector<char> hit(n, 0);
        for (Vertex v : g) {
            if (v >= n || hit[v]) {
                throw ValidationError("generator " + std::to_string(gi) + " is not a permutation");
            }
            hit[v] = 1;
        }
        for (const Simplex& s : complex_->maximal_simplices()) {
            if (!complex_->contains(apply(g, s))) {
                throw ValidationError("generator " + std::to_string(gi) + " is not simplicial");
            }
        }
        // Order divides p: every cycle length divides p, i.e. is 1 or p.
        std::vector<char> seen(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (seen[v]) {
                continue;
            }
            std::size_t len = 0;
            for (Vertex w = v; !seen[w]; w = g[w]) {
                seen[w] = 1;
                ++len;
            }
            if (len != 1 && len != p_) {
                throw ValidationError("generator " + std::to_string(gi) + " has order not dividing " +
                                      std::to_string(p_));
            }
        }
    }
    for (std::size_t a = 0; a < generators_.size(); ++a) {
        for (std::size_t b = a + 1; b < generators_.size(); ++b) {
            const Permutation& g = generators_[a];
            const Permutation& h = generators_[b];
            for (Vertex v = 0; v < n; ++v) {
                if (g[h[v]] != h[g[v]]) {
                    throw ValidationError("generators " + std::to_string(a) + " and " + std::to_string(b) +
                                          " do not commute");
                }
            }
        }
    }
}

GroupAction GroupAction::trivial(ComplexPtr complex, std::uint32_t p) {
    return GroupAction(std::move(complex), p, {});
}

std::vector<Vertex> GroupAction::fixed_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < complex_->vertex_count(); ++v) {
        bool fixed = std::all_of(generators_.begin(), generators_.end(),
                                 [v](const Permutation& g) { return g[v] == v; });
        if (fixed) {
            out.push_back(v);
        }
    }
    return out;
}

SimplicialMap GroupAction::generator_map(std::size_t i) const {
    return SimplicialMap(complex_, complex_, generators_.at(i));
}

Quotient quotient_by_action(const GroupAction& action) {
    const SimplicialComplex& k = *action.complex();
    const std::size_t n = k.vertex_count();

    UnionFind vertex_orbits(n);
    for (const Permutation& g : action.generators()) {
        for (Vertex v = 0; v < n; ++v) {
            vertex_orbits.unite(v, g[v]);
        }
    }
    std::vector<Vertex> orbit_of(n);
    std::vector<Vertex> orbit_id(n, static_cast<Vertex>(-1));
    Vertex orbits = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::size_t root = vertex_orbits.find(v);
        if (orbit_id[root] == static_cast<Vertex>(-1)) {
            orbit_id[root] = orbits++;
        }
        orbit_of[v] = orbit_id[root];
    }

    // Simplex orbits, per dimension, to detect distinct orbits with equal images.
    std::vector<Simplex> images;
    for (int d = 0; d <= k.dimension(); ++d) {
        auto level = k.simplices(d);
        UnionFind simplex_orbits(level.size());
        for (const Permutation& g : action.generators()) {
            for (std::size_t i = 0; i < level.size(); ++i) {
                simplex_orbits.unite(i, *k.index_of(apply(g, level[i])));
            }
        }
        std::unordered_map<Simplex, std::size_t, SimplexHash> owner;
        for (std::size_t i = 0; i < level.size(); ++i) {
            Simplex img;
            for (Vertex v : level[i]) {
                img.push_back(orbit_of[v]);
            }
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
                throw ValidationError("simplex " + k.simplex_label(level[i]) +
                                      " degenerates in the quotient; subdivide barycentrically first");
            }
            auto [it, inserted] = owner.emplace(img, simplex_orbits.find(i));
            if (!inserted && it->second != simplex_orbits.find(i)) {
                throw ValidationError("two simplex orbits collapse onto the same vertex set; "
                                      "subdivide barycentrically first");
            }
            if (inserted) {
                images.push_back(std::move(img));
            }
        }
    }
    auto q = std::make_shared<const SimplicialComplex>(orbits, images);
    return Quotient{q, SimplicialMap(action.complex(), q, orbit_of)};
}

bool quotient_matches(const GroupAction& action, const SimplicialMap& f) {
    if (!same_complex(f.domain(), action.complex())) {
        return false;
    }
    std::optional<Quotient> maybe;
    try {
        maybe.emplace(quotient_by_action(action));
    } catch (const ValidationError&) {
        return false;
    }
    const Quotient& q = *maybe;
    const std::size_t orbits = q.complex->vertex_count();
    std::vector<Vertex> induced(orbits, static_cast<Vertex>(-1));
    for (Vertex v = 0; v < f.domain()->vertex_count(); ++v) {
        Vertex o = q.orbit_map(v);
        if (induced[o] == static_cast<Vertex>(-1)) {
            induced[o] = f(v);
        } else if (induced[o] != f(v)) {
            return false;
        }
    }
    try {
        return is_isomorphism(SimplicialMap(q.complex, f.codomain(), induced));
    } catch (const ValidationError&) {
        return false;
    }
}

}  // namespace mpres
