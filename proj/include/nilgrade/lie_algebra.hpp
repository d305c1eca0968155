#pragma once

#include "nilgrade/matrix.hpp"
#include "nilgrade/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilgrade {

/// One structure constant: [X_i, X_j] has coefficient `c` on X_k (1-based, i < j).
struct BracketEntry {
    int i = 0;
    int j = 0;
    int k = 0;
    Scalar c;

    friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Builds an entry from [X_a, X_b] = c X_k with either order of a, b.
BracketEntry oriented_entry(int a, int b, int k, const Scalar& c = 1);

/// Finite-dimensional Lie algebra given by sparse structure constants on X_1..X_n.
///
/// Construction checks the entries are well formed (indices in range, i < j,
/// nonzero coefficient, at most one entry per (i, j, k)) and throws InputError
/// otherwise. The Jacobi identity is checked separately by validate().
class LieAlgebra {
public:
    LieAlgebra(std::string name, int dim, std::vector<BracketEntry> brackets);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    /// Sorted by (i, j, k).
    const std::vector<BracketEntry>& brackets() const { return brackets_; }
    bool is_abelian() const { return brackets_.empty(); }

    /// Coordinates of [X_a, X_b] (1-based indices, any order).
    Vector bracket_basis(int a, int b) const;

    LieAlgebra renamed(std::string name) const;

    /// Same structure constants and dimension; names are ignored.
    bool same_structure(const LieAlgebra& other) const;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<BracketEntry> brackets_;
    // (k, c) terms of [X_i, X_j] for i < j, indexed by (i-1)*dim + (j-1).
    std::vector<std::vector<std::pair<int, Scalar>>> table_;

    friend Vector bracket(const LieAlgebra&, const Vector&, const Vector&);
};

struct JacobiViolation {
    int i, j, k;
    Vector residual;
};

struct ValidationReport {
    bool ok = true;
    std::vector<JacobiViolation> violations;
};

/// Checks [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] = 0 for every i < j < k.
ValidationReport validate(const LieAlgebra& algebra);

/// Bilinear antisymmetric extension of the structure constants.
Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v);

Vector basis_vector(int dim, int index);

/// Linear subspace stored as a reduced row-echelon basis, so equality is exact.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);
    /// Span of the given vectors (each of length ambient_dim).
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool is_subspace_of(const Subspace& other) const;
    /// True if every basis vector has zero coordinates outside `support` (0-based flags).
    bool supported_on(const std::vector<bool>& support) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_;
};

struct SeriesReport {
    std::vector<Subspace> terms; ///< C^0 ⊇ C^1 ⊇ ... ⊇ 0
    std::vector<int> dims;
    int nilpotency_class = 0;
};

/// C^0 = n, C^{i+1} = [n, C^i]. Throws NotNilpotent if the series stalls above zero.
SeriesReport lower_central_series(const LieAlgebra& algebra);

/// p with dim C^i = max(m - i - p, 0) for all i >= 1, p >= 1; nullopt if none.
std::optional<int> p_filiform_degree(const LieAlgebra& algebra);
std::optional<int> p_filiform_degree(const SeriesReport& series);

/// n ⊕ C^m with the new basis vectors X_{n+1}..X_{n+m} central.
LieAlgebra direct_sum_abelian(const LieAlgebra& algebra, int m);

/// Structure constants in the basis Y_a = Σ_b P(a, b) X_b. P must be invertible.
LieAlgebra change_basis(const LieAlgebra& algebra, const RationalMatrix& p);

} // namespace nilgrade
