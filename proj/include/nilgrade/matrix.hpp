#pragma once

#include "nilgrade/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nilgrade {

using Vector = std::vector<Scalar>;

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    /// All rows must have the same length; `cols` is used when `rows` is empty.
    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    std::vector<Vector> to_rows() const;

    bool is_zero() const;
    RationalMatrix transposed() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Vector operator*(const RationalMatrix& m, const Vector& v);

/// Row echelon data produced by fraction-free elimination.
struct Echelon {
    std::vector<std::vector<Integer>> rows; ///< integer echelon rows, one per pivot
    std::vector<std::size_t> pivots;        ///< pivot column of each row
};

/// Fraction-free (Bareiss) forward elimination. Each input row is first scaled by the
/// lcm of its denominators, so all intermediate values are integers and every
/// division by the previous pivot is exact.
Echelon fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Reduced row-echelon form with zero rows removed.
RationalMatrix rref(const RationalMatrix& m);

/// Rows form the reduced-echelon basis of { v : m v = 0 }.
RationalMatrix kernel_basis(const RationalMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Column-major sparse matrix; used for Chevalley–Eilenberg differentials.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        Scalar value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Entries of one column, sorted by row, no explicit zeros.
    const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
    void set_column(std::size_t c, std::vector<Entry> entries);

    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    RationalMatrix to_dense() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

} // namespace nilgrade
