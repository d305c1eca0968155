#pragma once

#include "nilgrade/lie_algebra.hpp"
#include "nilgrade/matrix.hpp"

#include <cstdint>
#include <vector>

namespace nilgrade {

/// Strictly increasing 1-based indices (i_1 < ... < i_k) standing for x_{i_1} ∧ ... ∧ x_{i_k}.
using KFormIndex = std::vector<int>;

/// All C(n, k) k-forms in lexicographic order. Throws InputError unless 0 <= k <= n.
std::vector<KFormIndex> k_form_basis(int n, int k);

/// Matrix of d: Λ^k → Λ^{k+1} with columns indexed by k_form_basis(n, k) and rows by
/// k_form_basis(n, k + 1). On 1-forms dx_k = -Σ_{i<j} c_ij^k x_i ∧ x_j; higher degrees follow
/// the Leibniz rule. For k = n the matrix has no rows.
SparseMatrix ce_differential_sparse(const LieAlgebra& algebra, int k);
RationalMatrix ce_differential(const LieAlgebra& algebra, int k);

/// Integer basis of the lattice of weight vectors compatible with every bracket
/// (w_i + w_j = w_k whenever c_ij^k != 0). multidegree[i] is the coordinate vector of X_{i+1}.
struct WeightLattice {
    int rank = 0;
    std::vector<std::vector<long>> generators;  ///< rank rows of length n, primitive integers
    std::vector<std::vector<long>> multidegree; ///< n rows of length rank
};

WeightLattice weight_lattice(const LieAlgebra& algebra);

/// Rank of d on Λ^k, computed block by block along the finest multigrading.
std::size_t differential_rank(const LieAlgebra& algebra, int k);

/// b_k = dim H^k. Throws InputError unless 0 <= k <= n.
int betti(const LieAlgebra& algebra, int k);
/// (b_0, ..., b_max_degree).
std::vector<int> betti_vector(const LieAlgebra& algebra, int max_degree);

/// Cohomology of one multigraded block: every form in the block shares `representative`'s multidegree.
struct CohomologyBlock {
    std::vector<long> multidegree;
    KFormIndex representative;
    int dim = 0;
};

/// Nonzero blocks of H^j along the finest multigrading, in first-appearance order of k_form_basis.
std::vector<CohomologyBlock> multigraded_cohomology(const LieAlgebra& algebra, int j);

} // namespace nilgrade
