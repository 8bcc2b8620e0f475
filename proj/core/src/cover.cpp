#include "mpres/cover.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include "mpres/errors.hpp"
#include "mpres/homology.hpp"

namespace mpres {

namespace {

FpVector add(const FpVector& a, const FpVector& b, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + b[i]) % p);
    }
    return out;
}

FpVector negate(const FpVector& a, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] == 0 ? 0 : p - a[i];
    }
    return out;
}

std::size_t encode_sheet(const FpVector& a, std::uint32_t p) {
    std::size_t code = 0;
    for (std::uint32_t x : a) {
        code = code * p + x;
    }
    return code;
}

FpVector decode_sheet(std::size_t code, std::size_t rank, std::uint32_t p) {
    FpVector a(rank, 0);
    for (std::size_t i = rank; i-- > 0;) {
        a[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return a;
}

std::string describe_cycle(const SimplicialComplex& k, const FpVector& z) {
    std::ostringstream os;
    auto edges = k.simplices(1);
    bool first = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i]) {
            os << (first ? "" : " + ") << z[i] << "*" << k.simplex_label(edges[i]);
            first = false;
        }
    }
    return os.str();
}

}  // namespace

FpVector VoltageAssignment::oriented(Vertex from, Vertex to) const {
    Simplex e = from < to ? Simplex{from, to} : Simplex{to, from};
    auto idx = base->index_of(e);
    if (!idx) {
        throw ValidationError("no edge " + base->simplex_label(e));
    }
    const FpVector& v = voltages[*idx];
    return from < to ? v : negate(v, prime);
}

VoltageAssignment voltage_assignment(ComplexPtr base, std::uint32_t p) {
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
    if (!is_connected(*base)) {
        throw ValidationError("cannot build a cover of a disconnected complex");
    }
    const SimplicialComplex& k = *base;
    auto edges = k.simplices(1);

    // Breadth-first spanning tree from the least vertex, neighbours ascending.
    const Vertex none = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> parent(k.vertex_count(), none);
    std::vector<std::size_t> parent_edge(k.vertex_count(), 0);
    std::vector<char> in_tree(edges.size(), 0);
    auto adj = k.adjacency();
    std::queue<Vertex> frontier;
    frontier.push(0);
    parent[0] = 0;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : adj[v]) {
            if (parent[w] != none) {
                continue;
            }
            parent[w] = v;
            parent_edge[w] = *k.index_of(v < w ? Simplex{v, w} : Simplex{w, v});
            in_tree[parent_edge[w]] = 1;
            frontier.push(w);
        }
    }

    VoltageAssignment va;
    va.base = base;
    va.prime = p;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (in_tree[i]) {
            va.tree_edges.push_back(i);
        }
    }

    HomologyBasis h1 = homology_basis(k, 1, p);
    va.rank = h1.rank;
    va.voltages.assign(edges.size(), FpVector(h1.rank, 0));
    if (h1.rank == 0) {
        return va;
    }

    // Chain of the tree path from v up to the root.
    auto add_path_to_root = [&](FpVector& chain, Vertex v, bool subtract) {
        while (v != 0) {
            Vertex u = parent[v];
            // Traversal v -> u along edge [min, max].
            bool forward = v < u;
            bool positive = forward != subtract;
            std::uint32_t& c = chain[parent_edge[v]];
            c = static_cast<std::uint32_t>((c + (positive ? 1 : p - 1)) % p);
            v = u;
        }
    };

    std::vector<std::size_t> non_tree;
    std::vector<FpVector> cycles;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (in_tree[i]) {
            continue;
        }
        const Vertex u = edges[i][0];
        const Vertex w = edges[i][1];
        FpVector chain(edges.size(), 0);
        chain[i] = 1;                        // u -> w
        add_path_to_root(chain, w, false);   // w -> root
        add_path_to_root(chain, u, true);    // root -> u
        non_tree.push_back(i);
        cycles.push_back(std::move(chain));
    }
    FpMatrix coords = coordinates_in_quotient(p, edges.size(), cycles, h1.boundaries, h1.cycles);
    for (std::size_t j = 0; j < non_tree.size(); ++j) {
        va.voltages[non_tree[j]] = coords.column(j);
    }

    for (const Simplex& t : k.simplices(2)) {
        FpVector sum = add(add(va.oriented(t[0], t[1]), va.oriented(t[1], t[2]), p), va.oriented(t[2], t[0]), p);
        if (std::any_of(sum.begin(), sum.end(), [](std::uint32_t x) { return x != 0; })) {
            throw InternalError("voltage cocycle condition fails on " + k.simplex_label(t));
        }
    }
    return va;
}

Vertex Cover::vertex(Vertex v, const FpVector& sheet) const {
    return static_cast<Vertex>(std::size_t{v} * sheet_count + encode_sheet(sheet, prime));
}

std::pair<Vertex, FpVector> Cover::decode(Vertex x) const {
    return {static_cast<Vertex>(x / sheet_count), decode_sheet(x % sheet_count, rank, prime)};
}

Cover build_cover(ComplexPtr base, std::uint32_t p) {
    VoltageAssignment va = voltage_assignment(base, p);
    const std::size_t l = va.rank;
    std::size_t sheets = 1;
    for (std::size_t i = 0; i < l; ++i) {
        sheets *= p;
        if (sheets * base->vertex_count() > (std::size_t{1} << 31)) {
            throw ValidationError("cover would have more than 2^31 vertices");
        }
    }
    const SimplicialComplex& k = *base;

    std::vector<Simplex> lifted;
    for (const Simplex& s : k.maximal_simplices()) {
        std::vector<FpVector> offsets;
        for (Vertex v : s) {
            offsets.push_back(v == s[0] ? FpVector(l, 0) : va.oriented(s[0], v));
        }
        for (std::size_t code = 0; code < sheets; ++code) {
            FpVector a = decode_sheet(code, l, p);
            Simplex up;
            for (std::size_t i = 0; i < s.size(); ++i) {
                up.push_back(static_cast<Vertex>(std::size_t{s[i]} * sheets + encode_sheet(add(a, offsets[i], p), p)));
            }
            lifted.push_back(std::move(up));
        }
    }
    auto total = std::make_shared<const SimplicialComplex>(k.vertex_count() * sheets, lifted);

    std::vector<Vertex> projection(total->vertex_count());
    for (Vertex x = 0; x < projection.size(); ++x) {
        projection[x] = static_cast<Vertex>(x / sheets);
    }
    std::vector<Permutation> deck;
    for (std::size_t j = 0; j < l; ++j) {
        FpVector e(l, 0);
        e[j] = 1;
        Permutation t(total->vertex_count());
        for (Vertex x = 0; x < t.size(); ++x) {
            FpVector a = decode_sheet(x % sheets, l, p);
            t[x] = static_cast<Vertex>((x / sheets) * sheets + encode_sheet(add(a, e, p), p));
        }
        deck.push_back(std::move(t));
    }
    return Cover{base,
                 total,
                 p,
                 l,
                 sheets,
                 SimplicialMap(total, base, std::move(projection)),
                 GroupAction(total, p, std::move(deck)),
                 std::move(va)};
}

GroupAction lift_action(const Cover& cover, const GroupAction& action) {
    if (!same_complex(action.complex(), cover.base)) {
        throw ValidationError("action is not on the base of the cover");
    }
    if (action.prime() != cover.prime) {
        throw ValidationError("action and cover use different primes");
    }
    if (action.generator_count() == 0) {
        return GroupAction::trivial(cover.total, cover.prime);
    }
    const std::uint32_t p = cover.prime;
    std::vector<Vertex> fixed = action.fixed_vertices();
    if (fixed.empty()) {
        throw HypothesisError("lift_action: no vertex is fixed by the action (the fixed point set is empty)");
    }
    const Vertex x0 = fixed.front();

    HomologyBasis h1 = homology_basis(*cover.base, 1, p);
    const FpMatrix id = FpMatrix::identity(p, h1.rank);
    for (std::size_t gi = 0; gi < action.generator_count(); ++gi) {
        FpMatrix m = induced_map_on_homology(action.generator_map(gi), h1, h1);
        if (m != id) {
            std::size_t moved = 0;
            while (m.column(moved) == id.column(moved)) {
                ++moved;
            }
            throw HypothesisError("lift_action: generator " + std::to_string(gi) +
                                  " acts nontrivially on H_1(L;F_p); it moves the class of the loop " +
                                  describe_cycle(*cover.base, h1.cycles[moved]));
        }
    }

    const SimplicialComplex& total = *cover.total;
    auto adj = total.adjacency();
    const Vertex unset = std::numeric_limits<Vertex>::max();
    std::vector<Permutation> lifts;
    for (std::size_t gi = 0; gi < action.generator_count(); ++gi) {
        const Permutation& g = action.generator(gi);
        Permutation lift(total.vertex_count(), unset);
        const Vertex start = cover.vertex(x0, FpVector(cover.rank, 0));
        lift[start] = start;
        std::queue<Vertex> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            auto [u, a] = cover.decode(x);
            auto [gu, c] = cover.decode(lift[x]);
            for (Vertex y : adj[x]) {
                Vertex w = cover.projection(y);
                Vertex image = cover.vertex(g[w], add(c, cover.voltage.oriented(gu, g[w]), p));
                if (lift[y] == unset) {
                    lift[y] = image;
                    frontier.push(y);
                } else if (lift[y] != image) {
                    throw HypothesisError("lift_action: lift of generator " + std::to_string(gi) +
                                          " is inconsistent around a loop through edge " +
                                          cover.base->simplex_label(Simplex{std::min(u, w), std::max(u, w)}));
                }
            }
        }
        if (std::find(lift.begin(), lift.end(), unset) != lift.end()) {
            throw InternalError("cover total space is disconnected");
        }
        for (std::size_t j = 0; j < cover.deck.generator_count(); ++j) {
            const Permutation& t = cover.deck.generator(j);
            for (Vertex x = 0; x < total.vertex_count(); ++x) {
                if (lift[t[x]] != t[lift[x]]) {
                    throw InternalError("lifted generator " + std::to_string(gi) +
                                        " does not commute with deck generator " + std::to_string(j));
                }
            }
        }
        lifts.push_back(std::move(lift));
    }
    return GroupAction(cover.total, p, std::move(lifts));
}

VerificationReport verify_cover(const Cover& cover, const std::string& subject) {
    const std::uint32_t p = cover.prime;
    VerificationReport r;
    const std::size_t l = homology_basis(*cover.base, 1, p).rank;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < l; ++i) {
        expected *= p;
    }
    r.checks.push_back(Check{"sheets", subject, cover.sheet_count == expected ? "equal" : "differ",
                             {cover.sheet_count, expected}, cover.sheet_count == expected && cover.rank == l});

    const long long chi_base = euler_characteristic(*cover.base);
    const long long chi_total = euler_characteristic(*cover.total);
    const bool euler = chi_total == static_cast<long long>(expected) * chi_base;
    r.checks.push_back(Check{"euler", subject,
                             std::to_string(chi_total) + (euler ? "==" : "!=") + std::to_string(expected) + "*" +
                                 std::to_string(chi_base),
                             {},
                             euler});

    FpMatrix induced = induced_map_on_homology(cover.projection, 1, p);
    r.checks.push_back(Check{"zero_map", subject, induced.is_zero() ? "zero" : "nonzero",
                             {induced.cols(), induced.rows(), rank(induced)}, induced.is_zero()});

    const bool quotient = quotient_matches(cover.deck, cover.projection);
    r.checks.push_back(Check{"deck_quotient", subject, quotient ? "iso" : "mismatch",
                             {cover.total->vertex_count(), cover.base->vertex_count()}, quotient});
    return r;
}

}  // namespace mpres
