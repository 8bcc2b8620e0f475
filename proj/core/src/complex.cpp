#include "mpres/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "mpres/errors.hpp"

namespace mpres {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex ids.
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : s) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

Simplex make_simplex(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw ValidationError("simplex has a repeated vertex");
    }
    return vertices;
}

bool is_face(std::span<const Vertex> face, std::span<const Vertex> simplex) {
    return std::includes(simplex.begin(), simplex.end(), face.begin(), face.end());
}

Simplex simplex_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices,
                                     std::vector<std::string> labels, std::string name)
    : vertex_count_(vertex_count), labels_(std::move(labels)), name_(std::move(name)) {
    if (!labels_.empty() && labels_.size() != vertex_count_) {
        throw ValidationError("label count does not match vertex count");
    }
    std::vector<std::unordered_set<Simplex, SimplexHash>> levels;
    for (const Simplex& s : simplices) {
        if (s.empty()) {
            throw ValidationError("empty simplex");
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= vertex_count_) {
                throw ValidationError("simplex vertex " + std::to_string(s[i]) + " out of range");
            }
            if (i > 0 && s[i - 1] >= s[i]) {
                throw ValidationError("simplex vertices must be strictly increasing");
            }
        }
        if (levels.size() < s.size()) {
            levels.resize(s.size());
        }
        levels[s.size() - 1].insert(s);
    }
    // Face closure, top dimension downwards.
    for (std::size_t d = levels.size(); d-- > 1;) {
        for (const Simplex& s : levels[d]) {
            Simplex facet(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != skip) {
                        facet[j++] = s[i];
                    }
                }
                levels[d - 1].insert(facet);
            }
        }
    }
    by_dim_.resize(levels.size());
    for (std::size_t d = 0; d < levels.size(); ++d) {
        by_dim_[d].assign(levels[d].begin(), levels[d].end());
        std::sort(by_dim_[d].begin(), by_dim_[d].end());
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) {
            index_.emplace(by_dim_[d][i], i);
        }
    }
    if (count(0) != vertex_count_) {
        throw ValidationError("every vertex must belong to a simplex (" + std::to_string(count(0)) +
                              " of " + std::to_string(vertex_count_) + " used)");
    }
}

std::size_t SimplicialComplex::count(int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) {
        return 0;
    }
    return by_dim_[static_cast<std::size_t>(k)].size();
}

std::span<const Simplex> SimplicialComplex::simplices(int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) {
        return {};
    }
    return by_dim_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dimension(); ++k) {
        std::vector<char> covered(count(k), 0);
        for (const Simplex& s : simplices(k + 1)) {
            Simplex facet(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != skip) {
                        facet[j++] = s[i];
                    }
                }
                covered[*index_of(facet)] = 1;
            }
        }
        auto level = simplices(k);
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!covered[i]) {
                out.push_back(level[i]);
            }
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<Vertex>> adj(vertex_count_);
    for (const Simplex& e : simplices(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
    }
    return adj;
}

std::string SimplicialComplex::vertex_label(Vertex v) const {
    if (!labels_.empty()) {
        return labels_.at(v);
    }
    return std::to_string(v);
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << vertex_label(s[i]);
    }
    os << ']';
    return os.str();
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_ &&
           labels_ == other.labels_ && name_ == other.name_;
}

ComplexPtr closure_from_maximal(const std::vector<std::vector<Vertex>>& maximal,
                                std::vector<std::string> labels, std::string name) {
    std::vector<Simplex> simplices;
    simplices.reserve(maximal.size());
    Vertex top = 0;
    for (const auto& list : maximal) {
        if (list.empty()) {
            throw ValidationError("empty vertex list in maximal simplices");
        }
        simplices.push_back(make_simplex(list));
        top = std::max(top, simplices.back().back());
    }
    std::size_t n = labels.empty() ? (simplices.empty() ? 0 : std::size_t{top} + 1) : labels.size();
    return std::make_shared<const SimplicialComplex>(n, simplices, std::move(labels), std::move(name));
}

Components connected_components(const SimplicialComplex& k) {
    Components c;
    c.labels.assign(k.vertex_count(), static_cast<std::size_t>(-1));
    auto adj = k.adjacency();
    for (Vertex start = 0; start < k.vertex_count(); ++start) {
        if (c.labels[start] != static_cast<std::size_t>(-1)) {
            continue;
        }
        std::queue<Vertex> frontier;
        frontier.push(start);
        c.labels[start] = c.count;
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop();
            for (Vertex w : adj[v]) {
                if (c.labels[w] == static_cast<std::size_t>(-1)) {
                    c.labels[w] = c.count;
                    frontier.push(w);
                }
            }
        }
        ++c.count;
    }
    return c;
}

bool is_connected(const SimplicialComplex& k) {
    return connected_components(k).count == 1;
}

long long euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.count(d));
    }
    return chi;
}

Subcomplex filter_subcomplex(const SimplicialComplex& parent,
                             const std::function<bool(const Simplex&)>& keep) {
    std::vector<char> used(parent.vertex_count(), 0);
    std::vector<Simplex> kept;
    for (int d = 0; d <= parent.dimension(); ++d) {
        for (const Simplex& s : parent.simplices(d)) {
            if (keep(s)) {
                kept.push_back(s);
                if (d == 0) {
                    used[s[0]] = 1;
                }
            }
        }
    }
    Subcomplex sub;
    std::vector<Vertex> local(parent.vertex_count(), 0);
    for (Vertex v = 0; v < parent.vertex_count(); ++v) {
        if (used[v]) {
            local[v] = static_cast<Vertex>(sub.to_parent.size());
            sub.to_parent.push_back(v);
        }
    }
    std::vector<std::string> labels;
    if (!parent.labels().empty()) {
        for (Vertex v : sub.to_parent) {
            labels.push_back(parent.labels()[v]);
        }
    }
    for (Simplex& s : kept) {
        for (Vertex& v : s) {
            if (!used[v]) {
                throw InternalError("subcomplex predicate is not closed under faces");
            }
            v = local[v];
        }
    }
    sub.complex = std::make_shared<const SimplicialComplex>(sub.to_parent.size(), kept, std::move(labels));
    return sub;
}

Subcomplex skeleton(const SimplicialComplex& parent, int k) {
    return filter_subcomplex(parent, [k](const Simplex& s) { return static_cast<int>(s.size()) <= k + 1; });
}

Subcomplex simplex_closure(const SimplicialComplex& parent, const Simplex& s) {
    if (!parent.contains(s)) {
        throw ValidationError("simplex " + parent.simplex_label(s) + " is not in the complex");
    }
    return filter_subcomplex(parent, [&s](const Simplex& t) { return is_face(t, s); });
}

Subcomplex simplex_boundary(const SimplicialComplex& parent, const Simplex& s) {
    if (!parent.contains(s)) {
        throw ValidationError("simplex " + parent.simplex_label(s) + " is not in the complex");
    }
    return filter_subcomplex(parent, [&s](const Simplex& t) { return t.size() < s.size() && is_face(t, s); });
}

}  // namespace mpres
