#include "mpres/fp_matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mpres/errors.hpp"

namespace mpres {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) {
        throw ValidationError("zero has no inverse mod " + std::to_string(p));
    }
    // Fermat: a^(p-2).
    std::uint64_t base = a % p;
    std::uint64_t result = 1;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i * n + i] = 1;
    }
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw ValidationError("ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

FpMatrix FpMatrix::from_columns(std::uint32_t p, std::size_t rows, std::span<const FpVector> columns) {
    FpMatrix m(p, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw ValidationError("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m.data_[r * m.cols_ + c] = columns[c][r] % p;
        }
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long value) {
    long long mod = value % static_cast<long long>(p_);
    if (mod < 0) {
        mod += p_;
    }
    data_[r * cols_ + c] = static_cast<std::uint32_t>(mod);
}

FpVector FpMatrix::column(std::size_t c) const {
    FpVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = data_[r * cols_ + c];
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.data_[c * rows_ + r] = data_[r * cols_ + c];
        }
    }
    return t;
}

FpVector FpMatrix::apply(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) {
        throw ValidationError("vector length does not match matrix columns");
    }
    FpVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc = (acc + std::uint64_t{data_[r * cols_ + c]} * v[c]) % p_;
        }
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.cols_ != b.rows_) {
        throw ValidationError("matrix shapes or moduli do not match");
    }
    FpMatrix out(a.p_, a.rows_, b.cols_);
    const std::uint64_t p = a.p_;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::vector<std::uint64_t> acc(b.cols_, 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::uint64_t x = a.data_[r * a.cols_ + k];
            if (x == 0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                acc[c] = (acc[c] + x * b.data_[k * b.cols_ + c]) % p;
            }
        }
        for (std::size_t c = 0; c < b.cols_; ++c) {
            out.data_[r * out.cols_ + c] = static_cast<std::uint32_t>(acc[c]);
        }
    }
    return out;
}

namespace {

// F_2 elimination on bit-packed rows.
RowReduction rref_binary(const FpMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        auto src = m.row(r);
        for (std::size_t c = 0; c < cols; ++c) {
            if (src[c]) {
                bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }
    RowReduction out{FpMatrix(2, rows, cols), 0, {}};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows && !(bits[pivot * words + w] & mask)) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                             bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                             bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
        }
        const std::uint64_t* prow = &bits[rank * words];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && (bits[r * words + w] & mask)) {
                std::uint64_t* target = &bits[r * words];
                for (std::size_t k = w; k < words; ++k) {
                    target[k] ^= prow[k];
                }
            }
        }
        out.pivot_columns.push_back(c);
        ++rank;
    }
    out.rank = rank;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t word = bits[r * words + k];
            while (word) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(word));
                out.reduced.set(r, k * 64 + bit, 1);
                word &= word - 1;
            }
        }
    }
    return out;
}

RowReduction rref_generic(const FpMatrix& m) {
    const std::uint64_t p = m.prime();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    RowReduction out{m, 0, {}};
    FpMatrix& a = out.reduced;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            auto x = a.row(pivot);
            auto y = a.row(rank);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        auto prow = a.row(rank);
        const std::uint64_t inv = fp_inverse(prow[c], a.prime());
        for (std::size_t k = c; k < cols; ++k) {
            prow[k] = static_cast<std::uint32_t>(prow[k] * inv % p);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) {
                continue;
            }
            auto target = a.row(r);
            const std::uint64_t f = target[c];
            if (f == 0) {
                continue;
            }
            const std::uint64_t neg = p - f;
            for (std::size_t k = c; k < cols; ++k) {
                if (prow[k]) {
                    target[k] = static_cast<std::uint32_t>((target[k] + neg * prow[k]) % p);
                }
            }
        }
        out.pivot_columns.push_back(c);
        ++rank;
    }
    out.rank = rank;
    return out;
}

}  // namespace

RowReduction rref_rank(const FpMatrix& m) {
    return m.prime() == 2 ? rref_binary(m) : rref_generic(m);
}

std::size_t rank(const FpMatrix& m) {
    return rref_rank(m).rank;
}

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
    RowReduction red = rref_rank(m);
    const std::uint32_t p = m.prime();
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : red.pivot_columns) {
        is_pivot[c] = 1;
    }
    std::vector<FpVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        FpVector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            std::uint32_t x = red.reduced(i, f);
            v[red.pivot_columns[i]] = x == 0 ? 0 : p - x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FpVector> column_space_basis(const FpMatrix& m) {
    RowReduction red = rref_rank(m);
    std::vector<FpVector> basis;
    basis.reserve(red.rank);
    for (std::size_t c : red.pivot_columns) {
        basis.push_back(m.column(c));
    }
    return basis;
}

FpMatrix coordinates_in_quotient(std::uint32_t p, std::size_t dim, std::span<const FpVector> targets,
                                 std::span<const FpVector> subspace, std::span<const FpVector> complement) {
    const std::size_t s = subspace.size();
    const std::size_t c = complement.size();
    std::vector<FpVector> columns;
    columns.reserve(s + c + targets.size());
    columns.insert(columns.end(), subspace.begin(), subspace.end());
    columns.insert(columns.end(), complement.begin(), complement.end());
    columns.insert(columns.end(), targets.begin(), targets.end());
    RowReduction red = rref_rank(FpMatrix::from_columns(p, dim, columns));
    for (std::size_t i = 0; i < s + c; ++i) {
        if (i >= red.rank || red.pivot_columns[i] != i) {
            throw ValidationError("subspace and complement bases are not independent");
        }
    }
    if (red.rank > s + c) {
        throw ValidationError("vector lies outside span(subspace, complement)");
    }
    FpMatrix coords(p, c, targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) {
        for (std::size_t i = 0; i < c; ++i) {
            coords.set(i, j, red.reduced(s + i, s + c + j));
        }
    }
    return coords;
}

FpVector coordinates_in_quotient(std::uint32_t p, std::span<const std::uint32_t> v,
                                 std::span<const FpVector> subspace, std::span<const FpVector> complement) {
    std::vector<FpVector> target{FpVector(v.begin(), v.end())};
    return coordinates_in_quotient(p, v.size(), target, subspace, complement).column(0);
}

}  // namespace mpres
