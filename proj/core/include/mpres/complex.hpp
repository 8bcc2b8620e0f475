#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mpres {

/// Vertices are ordinals 0..n-1; the ordinal order is the canonical order.
using Vertex = std::uint32_t;

/// Strictly increasing list of vertices. Dimension is size() - 1.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Sorts and checks for repeated vertices; throws ValidationError on repeats.
Simplex make_simplex(std::vector<Vertex> vertices);

bool is_face(std::span<const Vertex> face, std::span<const Vertex> simplex);

/// Sorted union of two simplices.
Simplex simplex_union(std::span<const Vertex> a, std::span<const Vertex> b);

/**
 * Finite abstract simplicial complex.
 *
 * Simplices of each dimension are stored in lexicographic order, which fixes
 * the ordered chain bases used by the homology module. Instances are
 * immutable once built and are shared through ComplexPtr.
 */
class SimplicialComplex {
public:
    /// The empty complex.
    SimplicialComplex() = default;

    /// Builds the face closure of `simplices` on vertices 0..vertex_count-1.
    /// Every vertex must occur in some simplex.
    SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices,
                      std::vector<std::string> labels = {}, std::string name = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int k) const noexcept;
    std::size_t total_count() const noexcept { return index_.size(); }
    bool empty() const noexcept { return vertex_count_ == 0; }

    /// Simplices of dimension k in lexicographic order (empty span if k is out of range).
    std::span<const Simplex> simplices(int k) const noexcept;

    /// Position of `s` within simplices(dim s).
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Maximal simplices, dimension ascending then lexicographic.
    std::vector<Simplex> maximal_simplices() const;

    /// Vertex adjacency lists (sorted) from the 1-skeleton.
    std::vector<std::vector<Vertex>> adjacency() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& name() const noexcept { return name_; }
    std::string vertex_label(Vertex v) const;
    std::string simplex_label(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::vector<std::string> labels_;
    std::string name_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Smallest complex containing each listed simplex. Vertex ids are the
/// integers used (0..max); with labels, ids index into `labels`.
ComplexPtr closure_from_maximal(const std::vector<std::vector<Vertex>>& maximal,
                                std::vector<std::string> labels = {}, std::string name = {});

struct Components {
    std::size_t count = 0;
    /// Component label per vertex; labels are numbered by least vertex.
    std::vector<std::size_t> labels;
};

Components connected_components(const SimplicialComplex& k);
bool is_connected(const SimplicialComplex& k);

long long euler_characteristic(const SimplicialComplex& k);

/// A subcomplex materialized as its own complex plus the embedding of its
/// vertices into the parent (relative vertex order is preserved).
struct Subcomplex {
    ComplexPtr complex;
    std::vector<Vertex> to_parent;
};

/// All simplices of `parent` satisfying `keep`. The predicate must be closed
/// under taking faces.
Subcomplex filter_subcomplex(const SimplicialComplex& parent,
                             const std::function<bool(const Simplex&)>& keep);

/// Subcomplex of simplices of dimension <= k.
Subcomplex skeleton(const SimplicialComplex& parent, int k);

/// Closure of a single simplex of `parent`.
Subcomplex simplex_closure(const SimplicialComplex& parent, const Simplex& s);

/// Proper faces of a single simplex of `parent`.
Subcomplex simplex_boundary(const SimplicialComplex& parent, const Simplex& s);

}  // namespace mpres
