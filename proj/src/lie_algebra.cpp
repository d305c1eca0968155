#include "nilgrade/lie_algebra.hpp"

#include "nilgrade/errors.hpp"

#include <algorithm>
#include <tuple>

namespace nilgrade {

BracketEntry oriented_entry(int a, int b, int k, const Scalar& c) {
    if (a == b) throw InputError("bracket of a basis vector with itself");
    if (a < b) return {a, b, k, c};
    return {b, a, k, -c};
}

LieAlgebra::LieAlgebra(std::string name, int dim, std::vector<BracketEntry> brackets)
    : name_(std::move(name)), dim_(dim), brackets_(std::move(brackets)) {
    if (dim_ < 1) throw InputError("dimension must be positive, got " + std::to_string(dim_));
    for (const auto& e : brackets_) {
        const std::string where = "bracket entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                  std::to_string(e.k) + ")";
        if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim_ || e.j > dim_ || e.k > dim_)
            throw InputError(where + ": index out of range 1.." + std::to_string(dim_));
        if (e.i >= e.j) throw InputError(where + ": requires i < j");
        if (sgn(e.c) == 0) throw InputError(where + ": zero coefficient");
    }
    std::sort(brackets_.begin(), brackets_.end(), [](const BracketEntry& a, const BracketEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t t = 1; t < brackets_.size(); ++t) {
        const auto& a = brackets_[t - 1];
        const auto& b = brackets_[t];
        if (a.i == b.i && a.j == b.j && a.k == b.k)
            throw InputError("duplicate bracket entry (" + std::to_string(a.i) + "," + std::to_string(a.j) + "," +
                             std::to_string(a.k) + ")");
    }
    table_.resize(static_cast<std::size_t>(dim_) * dim_);
    for (const auto& e : brackets_)
        table_[static_cast<std::size_t>(e.i - 1) * dim_ + (e.j - 1)].emplace_back(e.k, e.c);
}

Vector LieAlgebra::bracket_basis(int a, int b) const {
    if (a < 1 || b < 1 || a > dim_ || b > dim_) throw InputError("basis index out of range");
    Vector out(dim_);
    if (a == b) return out;
    const bool flip = a > b;
    const auto& terms = table_[static_cast<std::size_t>(std::min(a, b) - 1) * dim_ + (std::max(a, b) - 1)];
    for (const auto& [k, c] : terms) out[k - 1] = flip ? Scalar(-c) : c;
    return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && brackets_ == other.brackets_;
}

Vector basis_vector(int dim, int index) {
    if (index < 1 || index > dim) throw InputError("basis index out of range");
    Vector v(dim);
    v[index - 1] = 1;
    return v;
}

Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v) {
    const int n = algebra.dim();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw InputError("bracket: vectors must have length " + std::to_string(n));
    Vector out(n);
    Scalar coeff;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto& terms = algebra.table_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
            if (terms.empty()) continue;
            coeff = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
            if (sgn(coeff) == 0) continue;
            for (const auto& [k, c] : terms) out[k - 1] += coeff * c;
        }
    return out;
}

ValidationReport validate(const LieAlgebra& algebra) {
    ValidationReport report;
    const int n = algebra.dim();
    auto is_zero = [](const Vector& v) {
        return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vector r1 = bracket(algebra, algebra.bracket_basis(i, j), basis_vector(n, k));
                Vector r2 = bracket(algebra, algebra.bracket_basis(j, k), basis_vector(n, i));
                Vector r3 = bracket(algebra, algebra.bracket_basis(k, i), basis_vector(n, j));
                for (int t = 0; t < n; ++t) r1[t] += r2[t] + r3[t];
                if (!is_zero(r1)) {
                    report.ok = false;
                    report.violations.push_back({i, j, k, std::move(r1)});
                }
            }
    return report;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    s.basis_ = rref(RationalMatrix::from_rows(vectors, ambient_dim));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = RationalMatrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw InputError("subspace membership: length mismatch");
    auto rows = basis_.to_rows();
    rows.push_back(v);
    return rank(RationalMatrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    if (ambient_ != other.ambient_) return false;
    auto rows = other.basis_.to_rows();
    for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row_vector(r));
    return rank(RationalMatrix::from_rows(rows, ambient_)) == other.dim();
}

bool Subspace::supported_on(const std::vector<bool>& support) const {
    if (support.size() != ambient_) throw InputError("support mask: length mismatch");
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!support[c] && sgn(basis_(r, c)) != 0) return false;
    return true;
}

SeriesReport lower_central_series(const LieAlgebra& algebra) {
    const int n = algebra.dim();
    SeriesReport report;
    report.terms.push_back(Subspace::full(n));
    report.dims.push_back(n);
    while (report.dims.back() > 0) {
        const Subspace& current = report.terms.back();
        std::vector<Vector> images;
        for (int b = 1; b <= n; ++b) {
            const Vector eb = basis_vector(n, b);
            for (std::size_t r = 0; r < current.dim(); ++r)
                images.push_back(bracket(algebra, eb, current.basis().row_vector(r)));
        }
        Subspace next = Subspace::span(n, images);
        if (static_cast<int>(next.dim()) >= report.dims.back())
            throw NotNilpotent("lower central series of '" + algebra.name() + "' stabilises at dimension " +
                               std::to_string(next.dim()));
        report.dims.push_back(static_cast<int>(next.dim()));
        report.terms.push_back(std::move(next));
    }
    report.nilpotency_class = static_cast<int>(report.dims.size()) - 1;
    return report;
}

std::optional<int> p_filiform_degree(const SeriesReport& series) {
    const int m = series.dims.front();
    if (series.dims.size() < 2) return std::nullopt;
    const int p = m - 1 - series.dims[1];
    if (p < 1) return std::nullopt;
    for (std::size_t i = 1; i < series.dims.size(); ++i) {
        const int expected = std::max(m - static_cast<int>(i) - p, 0);
        if (series.dims[i] != expected) return std::nullopt;
    }
    // The series stops at the first zero term; every later term is zero too, which
    // requires m - i - p <= 0 from that index on. That holds since expected values
    // decrease by one per step and the last stored entry matched zero.
    return p;
}

std::optional<int> p_filiform_degree(const LieAlgebra& algebra) {
    return p_filiform_degree(lower_central_series(algebra));
}

LieAlgebra direct_sum_abelian(const LieAlgebra& algebra, int m) {
    if (m < 0) throw InputError("direct_sum_abelian: m must be nonnegative");
    if (m == 0) return algebra;
    return LieAlgebra(algebra.name() + "+C^" + std::to_string(m), algebra.dim() + m, algebra.brackets());
}

LieAlgebra change_basis(const LieAlgebra& algebra, const RationalMatrix& p) {
    const int n = algebra.dim();
    if (static_cast<int>(p.rows()) != n || static_cast<int>(p.cols()) != n)
        throw InputError("basis change must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    const auto p_inv = inverse(p);
    if (!p_inv) throw InputError("basis change matrix is singular");

    std::vector<BracketEntry> entries;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const Vector image = bracket(algebra, p.row_vector(a - 1), p.row_vector(b - 1));
            // image = y^T P in X coordinates, so y^T = image^T P^{-1}.
            for (int c = 1; c <= n; ++c) {
                Scalar y;
                for (int d = 1; d <= n; ++d) y += image[d - 1] * (*p_inv)(d - 1, c - 1);
                if (sgn(y) != 0) entries.push_back({a, b, c, y});
            }
        }
    return LieAlgebra(algebra.name(), n, std::move(entries));
}

} // namespace nilgrade
