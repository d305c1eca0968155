#include "nilgrade/matrix.hpp"

#include "nilgrade/errors.hpp"

#include <map>
#include <utility>

namespace nilgrade {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector RationalMatrix::row_vector(std::size_t r) const {
    auto span = row(r);
    return Vector(span.begin(), span.end());
}

std::vector<Vector> RationalMatrix::to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const RationalMatrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw InputError("matrix-vector product: length mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

namespace {

std::vector<Integer> integer_row(std::span<const Scalar> row) {
    Integer scale = 1;
    for (const auto& x : row)
        if (sgn(x) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (sgn(row[c]) == 0) continue;
        out[c] = row[c].get_num() * (scale / row[c].get_den());
    }
    return out;
}

} // namespace

Echelon fraction_free_echelon(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m.row(r)));

    Echelon out;
    const std::size_t nrows = a.size();
    const std::size_t ncols = m.cols();
    Integer previous = 1;
    Integer t1, t2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        const Integer& pivot = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const bool lead_zero = sgn(a[i][c]) == 0;
            for (std::size_t j = c + 1; j < ncols; ++j) {
                // a[i][j] = (pivot * a[i][j] - a[i][c] * a[r][j]) / previous, exact.
                mpz_mul(t1.get_mpz_t(), pivot.get_mpz_t(), a[i][j].get_mpz_t());
                if (!lead_zero && sgn(a[r][j]) != 0) {
                    mpz_mul(t2.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivots.size(); }

RationalMatrix rref(const RationalMatrix& m) {
    const Echelon e = fraction_free_echelon(m);
    const std::size_t k = e.pivots.size();
    RationalMatrix out(k, m.cols());
    for (std::size_t r = 0; r < k; ++r) {
        const Integer& pivot = e.rows[r][e.pivots[r]];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(e.rows[r][c]) == 0) continue;
            out(r, c) = Scalar(e.rows[r][c], pivot);
            out(r, c).canonicalize();
        }
    }
    for (std::size_t r = k; r-- > 0;) {
        const std::size_t pc = e.pivots[r];
        for (std::size_t s = 0; s < r; ++s) {
            const Scalar factor = out(s, pc);
            if (sgn(factor) == 0) continue;
            for (std::size_t c = pc; c < m.cols(); ++c)
                if (sgn(out(r, c)) != 0) out(s, c) -= factor * out(r, c);
        }
    }
    return out;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
    const RationalMatrix reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (sgn(reduced(r, c)) == 0) ++c;
        is_pivot[c] = true;
        pivots.push_back(c);
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
        basis.push_back(std::move(v));
    }
    return rref(RationalMatrix::from_rows(basis, m.cols()));
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RationalMatrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
        augmented(r, n + r) = 1;
    }
    const RationalMatrix reduced = rref(augmented);
    if (reduced.rows() != n) return std::nullopt;
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (reduced(r, r) != 1) return std::nullopt;
        for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
    }
    return out;
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
    columns_.at(c) = std::move(entries);
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
}

RationalMatrix SparseMatrix::to_dense() const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& e : columns_[c]) out(e.row, c) = e.value;
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("sparse product: inner dimensions differ");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& eb : b.column(c))
            for (const auto& ea : a.column(eb.row)) acc[ea.row] += ea.value * eb.value;
        std::vector<SparseMatrix::Entry> col;
        for (auto& [row, value] : acc)
            if (sgn(value) != 0) col.push_back({row, std::move(value)});
        out.set_column(c, std::move(col));
    }
    return out;
}

} // namespace nilgrade
