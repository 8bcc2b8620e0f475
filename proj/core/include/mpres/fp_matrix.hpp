#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mpres {

bool is_prime(std::uint64_t n) noexcept;

/// Vector over F_p, entries in [0, p).
using FpVector = std::vector<std::uint32_t>;

/**
 * Dense row-major matrix over the prime field F_p.
 *
 * The modulus is checked for primality at construction; entries are always
 * stored reduced. Moduli are limited to p < 2^31 so that products fit in
 * 64-bit intermediates.
 */
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    /// Entries are reduced mod p (negative values allowed).
    static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);
    /// Matrix whose columns are the given vectors (each of length `rows`).
    static FpMatrix from_columns(std::uint32_t p, std::size_t rows, std::span<const FpVector> columns);

    std::uint32_t prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long value);

    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    FpVector column(std::size_t c) const;

    FpMatrix transpose() const;
    FpVector apply(std::span<const std::uint32_t> v) const;
    bool is_zero() const noexcept;

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    bool operator==(const FpMatrix& other) const = default;

private:
    std::uint32_t p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

struct RowReduction {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with leftmost-column, topmost-row pivoting.
RowReduction rref_rank(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Null-space basis, one vector per free column in increasing column order;
/// each vector has a 1 in its own free column and 0 in the other free columns.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Column-space basis drawn from the original columns (pivot columns).
std::vector<FpVector> column_space_basis(const FpMatrix& m);

/**
 * Coordinates of v's class with respect to `complement` modulo
 * span(`subspace`). The union of the two bases must be independent and v must
 * lie in its span; otherwise ValidationError.
 */
FpVector coordinates_in_quotient(std::uint32_t p, std::span<const std::uint32_t> v,
                                 std::span<const FpVector> subspace, std::span<const FpVector> complement);

/// Batched form: column j of the result holds the coordinates of targets[j].
FpMatrix coordinates_in_quotient(std::uint32_t p, std::size_t dim, std::span<const FpVector> targets,
                                 std::span<const FpVector> subspace, std::span<const FpVector> complement);

}  // namespace mpres
