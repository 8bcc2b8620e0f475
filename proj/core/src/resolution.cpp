#include "mpres/resolution.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mpres/cylinder.hpp"
#include "mpres/errors.hpp"
#include "mpres/fp_matrix.hpp"
#include "mpres/homology.hpp"
#include "mpres/parallel.hpp"

namespace mpres {

Subcomplex carrier_preimage(const SimplicialMap& f, const std::vector<Simplex>& carriers, const Simplex& sigma,
                            bool boundary_only) {
    if (sigma.size() > 64) {
        throw ValidationError("simplex too large for carrier bookkeeping");
    }
    const std::uint64_t full = sigma.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sigma.size()) - 1;
    // Per domain vertex: bitmask of its carrier inside sigma, or nullopt if not inside.
    std::vector<std::optional<std::uint64_t>> mask(f.domain()->vertex_count());
    for (Vertex v = 0; v < mask.size(); ++v) {
        std::uint64_t bits = 0;
        bool inside = true;
        for (Vertex c : carriers.at(f(v))) {
            auto it = std::lower_bound(sigma.begin(), sigma.end(), c);
            if (it == sigma.end() || *it != c) {
                inside = false;
                break;
            }
            bits |= std::uint64_t{1} << (it - sigma.begin());
        }
        if (inside) {
            mask[v] = bits;
        }
    }
    return filter_subcomplex(*f.domain(), [&](const Simplex& s) {
        std::uint64_t bits = 0;
        for (Vertex v : s) {
            if (!mask[v]) {
                return false;
            }
            bits |= *mask[v];
        }
        return !boundary_only || bits != full;
    });
}

namespace {

struct Piece {
    Subcomplex boundary;           // W, in the previous total
    Subcomplex base_boundary;      // subdivided ∂Δ, in the previous subdivision
    std::shared_ptr<const Cover> cover;
    std::optional<GroupAction> lifted;
    std::optional<MappingCone> cone;
};

Vertex local_index(const std::vector<Vertex>& to_parent, Vertex v) {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), v);
    if (it == to_parent.end() || *it != v) {
        throw InternalError("vertex is not in the subcomplex");
    }
    return static_cast<Vertex>(it - to_parent.begin());
}

Piece build_piece(const SimplicialMap& h, const std::vector<Simplex>& carriers,
                  const std::vector<Permutation>& generators, const SimplicialComplex& base, const Simplex& top,
                  std::uint32_t p) {
    Piece piece;
    piece.boundary = carrier_preimage(h, carriers, top, true);
    const Subcomplex& w = piece.boundary;
    if (!is_connected(*w.complex)) {
        throw HypothesisError("preimage of the boundary of " + base.simplex_label(top) + " is disconnected");
    }
    std::vector<Permutation> restricted;
    for (const Permutation& g : generators) {
        Permutation r(w.to_parent.size());
        for (Vertex i = 0; i < r.size(); ++i) {
            r[i] = local_index(w.to_parent, g[w.to_parent[i]]);
        }
        restricted.push_back(std::move(r));
    }
    GroupAction boundary_action(w.complex, p, std::move(restricted));
    piece.cover = std::make_shared<const Cover>(build_cover(w.complex, p));
    try {
        piece.lifted.emplace(lift_action(*piece.cover, boundary_action));
    } catch (const HypothesisError& e) {
        throw HypothesisError("while resolving " + base.simplex_label(top) + ": " + e.what());
    }
    piece.cone.emplace(mapping_cone(piece.cover->projection));
    piece.base_boundary = filter_subcomplex(*h.codomain(), [&](const Simplex& s) {
        for (Vertex v : s) {
            if (!is_face(carriers[v], top) || carriers[v].size() == top.size()) {
                return false;
            }
        }
        Simplex u;
        for (Vertex v : s) {
            u = simplex_union(u, carriers[v]);
        }
        return u.size() < top.size();
    });
    return piece;
}

}  // namespace

ResolutionStage resolve(ComplexPtr base, std::uint32_t p) {
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
    if (!base || base->empty() || !is_connected(*base)) {
        throw ValidationError("resolve needs a nonempty connected complex");
    }
    const SimplicialComplex& l = *base;

    Subcomplex skel = skeleton(l, 1);
    std::vector<Simplex> total_simplices = skel.complex->maximal_simplices();
    std::vector<Simplex> sub_simplices = total_simplices;
    std::size_t total_count = l.vertex_count();
    std::size_t sub_count = l.vertex_count();
    std::vector<Vertex> orbit(l.vertex_count());
    std::vector<Simplex> carriers(l.vertex_count());
    for (Vertex v = 0; v < l.vertex_count(); ++v) {
        orbit[v] = v;
        carriers[v] = Simplex{v};
    }
    std::vector<Permutation> generators;
    std::vector<ResolvedSimplex> resolved;

    ComplexPtr total = std::make_shared<const SimplicialComplex>(total_count, total_simplices);
    ComplexPtr sub = total;

    for (int n = 2; n <= l.dimension(); ++n) {
        auto tops = l.simplices(n);
        SimplicialMap h(total, sub, orbit);
        std::vector<Piece> pieces(tops.size());
        parallel_for(tops.size(), [&](std::size_t i) {
            pieces[i] = build_piece(h, carriers, generators, l, tops[i], p);
        });

        const std::size_t inherited = generators.size();
        for (std::size_t i = 0; i < tops.size(); ++i) {
            const Piece& piece = pieces[i];
            const Cover& cover = *piece.cover;
            const MappingCone& cone = *piece.cone;
            const std::vector<Vertex>& w = piece.boundary.to_parent;
            const std::vector<Vertex>& bd = piece.base_boundary.to_parent;
            const std::size_t ncover = cover.total->vertex_count();

            ResolvedSimplex rs;
            rs.simplex = tops[i];
            rs.rank = cover.rank;
            rs.first_generator = generators.size();
            rs.boundary_vertices = w;
            rs.apex = static_cast<Vertex>(total_count + ncover);
            rs.barycenter = static_cast<Vertex>(sub_count + bd.size());
            rs.cover = piece.cover;
            for (std::size_t m = 0; m < ncover; ++m) {
                rs.cover_vertices.push_back(static_cast<Vertex>(total_count + m));
            }

            // Cone layout: W, then cover vertices, then apex.
            auto to_total = [&](Vertex c) -> Vertex {
                if (c < w.size()) {
                    return w[c];
                }
                return static_cast<Vertex>(total_count + (c - w.size()));
            };
            for (Simplex s : cone.complex->maximal_simplices()) {
                for (Vertex& v : s) {
                    v = to_total(v);
                }
                std::sort(s.begin(), s.end());
                total_simplices.push_back(std::move(s));
            }
            // Subdivided Δ: cone over the collar of its subdivided boundary, same layout.
            auto to_sub = [&](Vertex c) -> Vertex {
                if (c < bd.size()) {
                    return bd[c];
                }
                return static_cast<Vertex>(sub_count + (c - bd.size()));
            };
            MappingCone collar = mapping_cone(SimplicialMap::identity(piece.base_boundary.complex));
            for (Simplex s : collar.complex->maximal_simplices()) {
                for (Vertex& v : s) {
                    v = to_sub(v);
                }
                std::sort(s.begin(), s.end());
                sub_simplices.push_back(std::move(s));
            }
            for (std::size_t c = 0; c <= bd.size(); ++c) {
                carriers.push_back(tops[i]);
            }
            for (std::size_t m = 0; m < ncover; ++m) {
                Vertex below = orbit[w[cover.projection(static_cast<Vertex>(m))]];
                orbit.push_back(static_cast<Vertex>(sub_count + local_index(bd, below)));
            }
            orbit.push_back(rs.barycenter);

            // Extend the action: inherited generators by their lifts, generators
            // from this dimension trivially, apex fixed.
            for (std::size_t g = 0; g < generators.size(); ++g) {
                Permutation& perm = generators[g];
                for (std::size_t m = 0; m < ncover; ++m) {
                    perm.push_back(static_cast<Vertex>(
                        total_count + (g < inherited ? piece.lifted->generator(g)[m] : m)));
                }
                perm.push_back(rs.apex);
            }
            for (std::size_t j = 0; j < cover.deck.generator_count(); ++j) {
                Permutation perm(total_count + ncover + 1);
                for (Vertex v = 0; v < total_count; ++v) {
                    perm[v] = v;
                }
                for (std::size_t m = 0; m < ncover; ++m) {
                    perm[total_count + m] = static_cast<Vertex>(total_count + cover.deck.generator(j)[m]);
                }
                perm[rs.apex] = rs.apex;
                generators.push_back(std::move(perm));
            }

            total_count += ncover + 1;
            sub_count += bd.size() + 1;
            resolved.push_back(std::move(rs));
        }
        total = std::make_shared<const SimplicialComplex>(total_count, total_simplices);
        sub = std::make_shared<const SimplicialComplex>(sub_count, sub_simplices);
    }

    ResolutionStage stage{p,
                          base,
                          sub,
                          std::move(carriers),
                          total,
                          GroupAction(total, p, std::move(generators)),
                          SimplicialMap(total, sub, std::move(orbit)),
                          std::move(resolved),
                          {}};
    stage.report = verify_resolution(stage);
    return stage;
}

ResolutionStage identity_stage(ComplexPtr base, std::uint32_t p) {
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
    std::vector<Simplex> carriers;
    for (Vertex v = 0; v < base->vertex_count(); ++v) {
        carriers.push_back(Simplex{v});
    }
    ResolutionStage stage{p,
                          base,
                          base,
                          std::move(carriers),
                          base,
                          GroupAction::trivial(base, p),
                          SimplicialMap::identity(base),
                          {},
                          {}};
    stage.report = verify_resolution(stage);
    return stage;
}

VerificationReport verify_resolution(const ResolutionStage& stage) {
    const SimplicialComplex& l = *stage.base;
    const std::uint32_t p = stage.prime;
    const SimplicialMap& f = stage.orbit_map;

    std::vector<Simplex> simplices;
    for (int d = 0; d <= l.dimension(); ++d) {
        for (const Simplex& s : l.simplices(d)) {
            simplices.push_back(s);
        }
    }
    std::vector<Check> star(simplices.size());
    parallel_for(simplices.size(), [&](std::size_t i) {
        Subcomplex whole = carrier_preimage(f, stage.carriers, simplices[i], false);
        Subcomplex boundary = carrier_preimage(f, stage.carriers, simplices[i], true);
        Restriction r = restriction_classification(subcomplex_inclusion(boundary, whole), 1, p);
        star[i] = Check{"star", l.simplex_label(simplices[i]), std::string(to_string(r.classification)),
                        {r.source_rank, r.target_rank, r.map_rank}, r.classification == Classification::iso};
    });

    VerificationReport report;
    report.checks = std::move(star);

    // Preimage of the 1-skeleton: carriers unite to at most an edge.
    Subcomplex over_skeleton = filter_subcomplex(*stage.total, [&](const Simplex& s) {
        Simplex u;
        for (Vertex v : s) {
            u = simplex_union(u, stage.carriers[f(v)]);
        }
        return u.size() <= 2;
    });
    Subcomplex skel = skeleton(l, 1);
    bool embedded = false;
    try {
        std::vector<Vertex> vm;
        for (Vertex v : over_skeleton.to_parent) {
            const Simplex& c = stage.carriers[f(v)];
            if (c.size() != 1) {
                throw ValidationError("vertex over the open edge");
            }
            vm.push_back(c[0]);
        }
        embedded = is_isomorphism(SimplicialMap(over_skeleton.complex, skel.complex, std::move(vm)));
    } catch (const ValidationError&) {
        embedded = false;
    }
    report.checks.push_back(Check{"skeleton_embedding", "L(1)", embedded ? "iso" : "not-iso",
                                  {over_skeleton.complex->vertex_count(), skel.complex->vertex_count()}, embedded});

    Restriction j = restriction_classification(SimplicialMap::inclusion(over_skeleton, stage.total), 1, p);
    report.checks.push_back(Check{"skeleton_h1", "L(1)", std::string(to_string(j.classification)),
                                  {j.source_rank, j.target_rank, j.map_rank},
                                  j.classification == Classification::iso});

    bool quotient_ok = quotient_matches(stage.action, f);
    report.checks.push_back(Check{"quotient", "-", quotient_ok ? "iso" : "mismatch",
                                  {stage.subdivision->vertex_count()}, quotient_ok});

    bool fixed = true;
    for (Vertex v : over_skeleton.to_parent) {
        for (const Permutation& g : stage.action.generators()) {
            fixed = fixed && g[v] == v;
        }
    }
    report.checks.push_back(Check{"fixed_skeleton", "L(1)", fixed ? "fixed" : "moved",
                                  {stage.action.generator_count()}, fixed});
    return report;
}

MayerVietoris mayer_vietoris_ranks(const ResolutionStage& stage, const Simplex& top) {
    const SimplicialComplex& l = *stage.base;
    const std::uint32_t p = stage.prime;
    std::vector<Simplex> rest;
    bool found = false;
    for (const Simplex& s : l.maximal_simplices()) {
        if (s == top) {
            found = true;
        } else {
            rest.push_back(s);
        }
    }
    if (!found || rest.empty()) {
        throw ValidationError("Mayer-Vietoris split needs a maximal simplex and a nonempty remainder");
    }
    auto in_rest = [&rest](const Simplex& u) {
        return std::any_of(rest.begin(), rest.end(), [&u](const Simplex& r) { return is_face(u, r); });
    };
    auto carrier_of = [&](const Simplex& s) {
        Simplex u;
        for (Vertex v : s) {
            u = simplex_union(u, stage.carriers[stage.orbit_map(v)]);
        }
        return u;
    };
    Subcomplex n_hat = filter_subcomplex(*stage.total, [&](const Simplex& s) { return in_rest(carrier_of(s)); });
    Subcomplex d_hat = carrier_preimage(stage.orbit_map, stage.carriers, top, false);
    Subcomplex overlap = filter_subcomplex(*stage.total, [&](const Simplex& s) {
        Simplex u = carrier_of(s);
        return in_rest(u) && is_face(u, top);
    });

    SimplicialMap to_n = subcomplex_inclusion(overlap, n_hat);
    SimplicialMap to_d = subcomplex_inclusion(overlap, d_hat);

    // Ranks of H_k(overlap) -> H_k(N̂) ⊕ H_k(Δ̂), stacked.
    auto stacked_rank = [&](int k, bool reduced) {
        FpMatrix a = induced_map_on_homology(to_n, k, p, reduced);
        FpMatrix b = induced_map_on_homology(to_d, k, p, reduced);
        FpMatrix both(p, a.rows() + b.rows(), a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
                both.set(r, c, a(r, c));
            }
            for (std::size_t r = 0; r < b.rows(); ++r) {
                both.set(a.rows() + r, c, b(r, c));
            }
        }
        return std::pair{rank(both), both};
    };
    auto [rank1, m1] = stacked_rank(1, false);
    auto [rank0, m0] = stacked_rank(0, true);

    MayerVietoris mv;
    mv.direct = homology_basis(*stage.total, 1, p).rank;
    mv.predicted = (m1.rows() - rank1) + (m0.cols() - rank0);
    mv.skeleton = homology_basis(*skeleton(l, 1).complex, 1, p).rank;
    return mv;
}

}  // namespace mpres
