#pragma once

// Reference implementations for tests. Nothing here calls into mpres: faces
// are enumerated from bitmasks, ranks come from plain column elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Cell = std::vector<int>;

/// Every nonempty face of every listed simplex, grouped by dimension.
inline std::vector<std::vector<Cell>> faces_by_dim(const std::vector<std::vector<int>>& maximal) {
    std::set<Cell> all;
    for (auto top : maximal) {
        std::sort(top.begin(), top.end());
        const int n = static_cast<int>(top.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            Cell c;
            for (int i = 0; i < n; ++i) {
                if (mask & (1 << i)) {
                    c.push_back(top[i]);
                }
            }
            all.insert(c);
        }
    }
    std::vector<std::vector<Cell>> out;
    for (const Cell& c : all) {
        if (out.size() < c.size()) {
            out.resize(c.size());
        }
        out[c.size() - 1].push_back(c);
    }
    return out;
}

/// Rank over F_p of a matrix given as columns, by eliminating column against column.
inline std::size_t rank_mod(std::vector<std::vector<long long>> cols, long long p) {
    auto inv = [p](long long a) {
        long long r = 1;
        for (long long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p) {
            if (e & 1) {
                r = r * b % p;
            }
        }
        return r;
    };
    std::size_t rank = 0;
    std::map<std::size_t, std::vector<long long>> pivots;  // lowest nonzero row -> reduced column
    for (auto& c : cols) {
        for (auto& x : c) {
            x = ((x % p) + p) % p;
        }
        for (;;) {
            std::size_t low = c.size();
            for (std::size_t r = c.size(); r-- > 0;) {
                if (c[r] != 0) {
                    low = r;
                    break;
                }
            }
            if (low == c.size()) {
                break;
            }
            auto it = pivots.find(low);
            if (it == pivots.end()) {
                pivots.emplace(low, c);
                ++rank;
                break;
            }
            long long factor = c[low] * inv(it->second[low]) % p;
            for (std::size_t r = 0; r < c.size(); ++r) {
                c[r] = ((c[r] - factor * it->second[r]) % p + p) % p;
            }
        }
    }
    return rank;
}

/// Betti numbers b_0..b_dim over F_p (unreduced).
inline std::vector<std::size_t> betti(const std::vector<std::vector<int>>& maximal, long long p) {
    auto cells = faces_by_dim(maximal);
    const std::size_t top = cells.size();
    std::vector<std::size_t> boundary_rank(top + 1, 0);  // rank of ∂_k, k = 1..top-1
    for (std::size_t k = 1; k < top; ++k) {
        std::map<Cell, std::size_t> row;
        for (std::size_t i = 0; i < cells[k - 1].size(); ++i) {
            row[cells[k - 1][i]] = i;
        }
        std::vector<std::vector<long long>> cols;
        for (const Cell& c : cells[k]) {
            std::vector<long long> col(cells[k - 1].size(), 0);
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                Cell f = c;
                f.erase(f.begin() + static_cast<long>(drop));
                col[row.at(f)] = drop % 2 == 0 ? 1 : -1;
            }
            cols.push_back(std::move(col));
        }
        boundary_rank[k] = rank_mod(std::move(cols), p);
    }
    std::vector<std::size_t> b(top);
    for (std::size_t k = 0; k < top; ++k) {
        b[k] = cells[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    }
    return b;
}

}  // namespace oracle
