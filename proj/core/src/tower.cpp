#include "mpres/tower.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "mpres/errors.hpp"
#include "mpres/homology.hpp"
#include "mpres/parallel.hpp"
#include "mpres/subdivision.hpp"

namespace mpres {

namespace {

using Pair = std::pair<Vertex, Vertex>;

Vertex pair_index(const std::vector<Pair>& pairs, Pair key) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key) {
        throw InternalError("vertex pair missing from the fiber product");
    }
    return static_cast<Vertex>(it - pairs.begin());
}

// Vertices of `s` lying over y, ascending.
std::vector<Vertex> block_over(const SimplicialMap& f, const Simplex& s, Vertex y) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
        if (f(v) == y) {
            out.push_back(v);
        }
    }
    return out;
}

// Appends every maximal chain of the grid xs × zs (monotone lattice paths).
void staircases(const std::vector<Vertex>& xs, const std::vector<Vertex>& zs, std::vector<std::vector<Pair>>& out) {
    std::vector<Pair> path;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        path.emplace_back(xs[i], zs[j]);
        if (i + 1 == xs.size() && j + 1 == zs.size()) {
            out.push_back(path);
        }
        if (i + 1 < xs.size()) {
            walk(i + 1, j);
        }
        if (j + 1 < zs.size()) {
            walk(i, j + 1);
        }
        path.pop_back();
    };
    walk(0, 0);
}

}  // namespace

FiberProduct fiber_product(const SimplicialMap& f, const SimplicialMap& g) {
    if (!same_complex(f.codomain(), g.codomain())) {
        throw ValidationError("fiber product needs a common codomain");
    }
    const SimplicialComplex& x = *f.domain();
    const SimplicialComplex& z = *g.domain();
    const std::size_t ny = f.codomain()->vertex_count();

    std::vector<std::vector<Vertex>> x_over(ny), z_over(ny);
    for (Vertex v = 0; v < x.vertex_count(); ++v) {
        x_over[f(v)].push_back(v);
    }
    for (Vertex v = 0; v < z.vertex_count(); ++v) {
        z_over[g(v)].push_back(v);
    }
    std::vector<Pair> pairs;
    for (Vertex y = 0; y < ny; ++y) {
        for (Vertex a : x_over[y]) {
            for (Vertex b : z_over[y]) {
                pairs.emplace_back(a, b);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.empty()) {
        throw ValidationError("fiber product is empty");
    }

    const std::vector<Simplex> x_max = x.maximal_simplices();
    const std::vector<Simplex> z_max = z.maximal_simplices();
    std::vector<Simplex> z_image(z_max.size());
    std::vector<std::vector<std::size_t>> z_touching(ny);
    for (std::size_t t = 0; t < z_max.size(); ++t) {
        z_image[t] = g.image(z_max[t]);
        for (Vertex y : z_image[t]) {
            z_touching[y].push_back(t);
        }
    }

    std::vector<Simplex> simplices;
    for (const Simplex& sigma : x_max) {
        const Simplex rho = f.image(sigma);
        std::vector<std::size_t> candidates;
        for (Vertex y : rho) {
            candidates.insert(candidates.end(), z_touching[y].begin(), z_touching[y].end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (std::size_t t : candidates) {
            Simplex common;
            std::set_intersection(rho.begin(), rho.end(), z_image[t].begin(), z_image[t].end(),
                                  std::back_inserter(common));
            // Concatenate one staircase per common image vertex.
            std::vector<std::vector<Pair>> chains{{}};
            for (Vertex y : common) {
                std::vector<std::vector<Pair>> pieces;
                staircases(block_over(f, sigma, y), block_over(g, z_max[t], y), pieces);
                std::vector<std::vector<Pair>> next;
                for (const auto& head : chains) {
                    for (const auto& piece : pieces) {
                        auto joined = head;
                        joined.insert(joined.end(), piece.begin(), piece.end());
                        next.push_back(std::move(joined));
                    }
                }
                chains = std::move(next);
            }
            for (const auto& chain : chains) {
                Simplex s;
                for (const Pair& pr : chain) {
                    s.push_back(pair_index(pairs, pr));
                }
                std::sort(s.begin(), s.end());
                simplices.push_back(std::move(s));
            }
        }
    }
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    auto complex = std::make_shared<const SimplicialComplex>(pairs.size(), simplices);
    std::vector<Vertex> first, second;
    for (const Pair& pr : pairs) {
        first.push_back(pr.first);
        second.push_back(pr.second);
    }
    return FiberProduct{complex, SimplicialMap(complex, f.domain(), std::move(first)),
                        SimplicialMap(complex, g.domain(), std::move(second)), std::move(pairs)};
}

PulledTriangulation pullback_triangulation(const SimplicialMap& k, ComplexPtr fine,
                                           const std::vector<Simplex>& carriers) {
    if (!k.nondegenerate()) {
        throw ValidationError("pullback_triangulation needs a nondegenerate map");
    }
    if (carriers.size() != fine->vertex_count()) {
        throw ValidationError("one carrier per fine vertex is required");
    }
    // Maximal fine simplices lying in a given coarse simplex, cached per simplex.
    std::map<Simplex, std::vector<Simplex>> inside;
    auto fine_in = [&](const Simplex& rho) -> const std::vector<Simplex>& {
        auto it = inside.find(rho);
        if (it != inside.end()) {
            return it->second;
        }
        Subcomplex sub = filter_subcomplex(*fine, [&](const Simplex& s) {
            return std::all_of(s.begin(), s.end(), [&](Vertex y) { return is_face(carriers[y], rho); });
        });
        std::vector<Simplex> out;
        for (Simplex s : sub.complex->maximal_simplices()) {
            for (Vertex& v : s) {
                v = sub.to_parent[v];
            }
            out.push_back(std::move(s));
        }
        return inside.emplace(rho, std::move(out)).first->second;
    };

    using Key = std::pair<Vertex, Simplex>;  // (fine vertex, coarse face)
    std::vector<std::vector<Key>> raw;
    for (const Simplex& s : k.domain()->maximal_simplices()) {
        for (const Simplex& r : fine_in(k.image(s))) {
            std::vector<Key> keys;
            for (Vertex y : r) {
                Simplex face;
                for (Vertex v : s) {
                    if (is_face(Simplex{k(v)}, carriers[y])) {
                        face.push_back(v);
                    }
                }
                keys.emplace_back(y, std::move(face));
            }
            raw.push_back(std::move(keys));
        }
    }
    std::vector<Key> vertices;
    for (const auto& keys : raw) {
        vertices.insert(vertices.end(), keys.begin(), keys.end());
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    auto id = [&](const Key& key) {
        return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), key) - vertices.begin());
    };
    std::vector<Simplex> simplices;
    for (const auto& keys : raw) {
        Simplex s;
        for (const Key& key : keys) {
            s.push_back(id(key));
        }
        std::sort(s.begin(), s.end());
        simplices.push_back(std::move(s));
    }
    auto complex = std::make_shared<const SimplicialComplex>(vertices.size(), simplices);
    std::vector<Vertex> over;
    std::vector<Simplex> faces;
    for (auto& [y, face] : vertices) {
        over.push_back(y);
        faces.push_back(std::move(face));
    }
    return PulledTriangulation{complex, SimplicialMap(complex, fine, std::move(over)), std::move(faces)};
}

TowerStage stage_from_resolution(const ResolutionStage& stage) {
    TowerStage out{1,
                   stage.prime,
                   stage.total,
                   stage.subdivision,
                   stage.base,
                   stage.carriers,
                   stage.orbit_map,
                   stage.action,
                   {stage.generator_count()},
                   std::nullopt,
                   std::nullopt,
                   {},
                   {}};
    out.report = verify_tower_stage(out);
    return out;
}

namespace {

TowerStage next_stage(const TowerStage& prev) {
    const std::uint32_t p = prev.prime;
    BarycentricSubdivision sd = barycentric_subdivision(*prev.base);
    ResolutionStage res = resolve(sd.complex, p);

    std::vector<Simplex> previous_carriers;
    for (const Simplex& chain : res.carriers) {
        Simplex u;
        for (Vertex v : chain) {
            u = simplex_union(u, sd.carriers[v]);
        }
        previous_carriers.push_back(std::move(u));
    }
    PulledTriangulation nu = pullback_triangulation(prev.projection, res.subdivision, previous_carriers);
    FiberProduct fp = fiber_product(nu.projection, res.orbit_map);

    // Old generators act on the re-triangulation through the faces.
    std::map<std::pair<Vertex, Simplex>, Vertex> nu_index;
    for (Vertex v = 0; v < nu.faces.size(); ++v) {
        nu_index.emplace(std::pair{nu.projection(v), nu.faces[v]}, v);
    }
    std::vector<Permutation> generators;
    for (const Permutation& g : prev.action.generators()) {
        Permutation on_nu(nu.faces.size());
        for (Vertex v = 0; v < on_nu.size(); ++v) {
            Simplex moved;
            for (Vertex w : nu.faces[v]) {
                moved.push_back(g[w]);
            }
            std::sort(moved.begin(), moved.end());
            on_nu[v] = nu_index.at({nu.projection(v), moved});
        }
        Permutation perm(fp.pairs.size());
        for (Vertex v = 0; v < perm.size(); ++v) {
            perm[v] = pair_index(fp.pairs, {on_nu[fp.pairs[v].first], fp.pairs[v].second});
        }
        generators.push_back(std::move(perm));
    }
    for (const Permutation& h : res.action.generators()) {
        Permutation perm(fp.pairs.size());
        for (Vertex v = 0; v < perm.size(); ++v) {
            perm[v] = pair_index(fp.pairs, {fp.pairs[v].first, h[fp.pairs[v].second]});
        }
        generators.push_back(std::move(perm));
    }
    std::vector<std::size_t> per_stage = prev.generators_per_stage;
    per_stage.push_back(res.generator_count());

    TowerStage out{prev.index + 1,
                   p,
                   fp.complex,
                   res.subdivision,
                   sd.complex,
                   res.carriers,
                   compose(res.orbit_map, fp.to_second),
                   GroupAction(fp.complex, p, std::move(generators)),
                   std::move(per_stage),
                   std::move(nu),
                   fp.to_first,
                   std::move(previous_carriers),
                   {}};
    out.report = verify_tower_stage(out);
    return out;
}

}  // namespace

std::vector<TowerStage> build_tower(ComplexPtr y, std::uint32_t p, std::size_t depth) {
    if (depth < 1) {
        throw ValidationError("tower depth must be at least 1");
    }
    std::vector<TowerStage> stages;
    stages.push_back(stage_from_resolution(resolve(std::move(y), p)));
    while (stages.size() < depth) {
        stages.push_back(next_stage(stages.back()));
    }
    return stages;
}

VerificationReport verify_tower_stage(const TowerStage& stage) {
    const SimplicialComplex& l = *stage.check_base;
    const std::uint32_t p = stage.prime;
    std::vector<Simplex> simplices;
    for (int d = 0; d <= l.dimension(); ++d) {
        for (const Simplex& s : l.simplices(d)) {
            simplices.push_back(s);
        }
    }
    VerificationReport report;
    report.checks.resize(simplices.size());
    parallel_for(simplices.size(), [&](std::size_t i) {
        Subcomplex whole = carrier_preimage(stage.projection, stage.carriers, simplices[i], false);
        Subcomplex boundary = carrier_preimage(stage.projection, stage.carriers, simplices[i], true);
        Restriction r = restriction_classification(subcomplex_inclusion(boundary, whole), 1, p);
        report.checks[i] = Check{"epi", l.simplex_label(simplices[i]), std::string(to_string(r.classification)),
                                 {r.source_rank, r.target_rank, r.map_rank}, r.map_rank == r.source_rank};
    });

    std::vector<std::size_t> fiber(stage.base->vertex_count(), 0);
    for (Vertex v = 0; v < stage.complex->vertex_count(); ++v) {
        ++fiber[stage.projection(v)];
    }
    bool divides = true;
    std::size_t largest = 0;
    for (std::size_t n : fiber) {
        largest = std::max(largest, n);
        std::size_t e = 0;
        while (n > 1 && n % p == 0) {
            n /= p;
            ++e;
        }
        divides = divides && n == 1 && e <= stage.total_generators();
    }
    report.checks.push_back(Check{"vertex_fibers", "-", divides ? "divides" : "does-not-divide",
                                  {largest, stage.total_generators()}, divides});

    if (stage.refined_previous && stage.bonding) {
        bool commutes =
            compose(stage.refined_previous->projection, *stage.bonding).vertex_map() == stage.projection.vertex_map();
        report.checks.push_back(Check{"composition", "-", commutes ? "equal" : "differ",
                                      {stage.complex->vertex_count()}, commutes});
    }
    bool quotient_ok = quotient_matches(stage.action, stage.projection);
    report.checks.push_back(Check{"quotient", "-", quotient_ok ? "iso" : "mismatch",
                                  {stage.base->vertex_count()}, quotient_ok});
    return report;
}

}  // namespace mpres
