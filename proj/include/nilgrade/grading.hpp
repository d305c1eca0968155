#pragma once

#include "nilgrade/lie_algebra.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilgrade {

/// Degree of each basis vector; weights()[i] is the degree of X_{i+1}. Every weight is <= -1.
class WeightAssignment {
public:
    /// Throws InputError on an empty list or a weight >= 0.
    explicit WeightAssignment(std::vector<int> weights);

    /// Comma-separated integers such as "-1,-1,-2". Throws ParseError / InputError.
    static WeightAssignment parse_csv(std::string_view text);
    std::string to_csv() const;

    const std::vector<int>& weights() const { return weights_; }
    int size() const { return static_cast<int>(weights_.size()); }
    /// Weight of X_index (1-based).
    int of(int index) const { return weights_.at(index - 1); }
    int max_abs() const;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
    /// Ascending lexicographic order of the absolute-value vector.
    friend std::strong_ordering operator<=>(const WeightAssignment& a, const WeightAssignment& b);

private:
    std::vector<int> weights_;
};

struct BracketTriple {
    int i, j, k;
    friend bool operator==(const BracketTriple&, const BracketTriple&) = default;
};

struct HomogeneityReport {
    bool homogeneous = true;
    std::vector<BracketTriple> violations;
};

/// Throws InputError if the length differs from dim(L).
HomogeneityReport is_homogeneous(const LieAlgebra& algebra, const WeightAssignment& w);

/// dim H^j_k by positive cochain degree k (zero entries omitted).
struct GradedBettiProfile {
    int j = 0;
    std::map<int, int> by_degree;
    int total() const;
};

/// Direct route: splits the differentials by cochain degree and takes ranks per block.
/// Throws PreconditionError if w is not homogeneous, InputError unless j is 1 or 2.
GradedBettiProfile graded_betti(const LieAlgebra& algebra, const WeightAssignment& w, int j);

enum class Verdict { pass, fail, not_evaluated };
const char* to_string(Verdict verdict);

enum class Mode { wh, w };
const char* to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// H^j has a nonzero component in a degree outside the allowed window.
struct WeightOffense {
    int j, k, dim;
};

/// An odd-degree piece of odd dimension. `part` is "component" (dim n_{-k}), "H1" or "H2".
struct ParityOffense {
    std::string part;
    int k, dim;
};

struct ConditionReport {
    bool homogeneous = false;
    std::vector<BracketTriple> violations;
    Verdict w = Verdict::not_evaluated;
    Verdict h = Verdict::not_evaluated;
    std::vector<WeightOffense> w_offenses;
    std::vector<ParityOffense> h_offenses;
    std::optional<GradedBettiProfile> h1;
    std::optional<GradedBettiProfile> h2;
    std::map<int, int> component_dims; ///< negative degree -> dim n_degree

    /// Homogeneous and every condition required by `mode` passes.
    bool passes(Mode mode) const;
};

ConditionReport check_conditions(const LieAlgebra& algebra, const WeightAssignment& w);

WeightAssignment double_weights(const WeightAssignment& w);

/// w followed by m copies of `weight` (for the central generators of a trivial extension).
WeightAssignment extend_with_central(const WeightAssignment& w, int m, int weight = -2);

struct LemmaReport {
    int grading_length = 0;  ///< number of distinct occupied weights
    int nilpotency_class = 0;
    bool length_ok = true;
    std::vector<int> failed_inclusions; ///< k with C^k not inside the sum of n_i, i < i_k
    bool ok() const { return length_ok && failed_inclusions.empty(); }
};

/// Throws PreconditionError if w is not homogeneous.
LemmaReport structural_lemma_checks(const LieAlgebra& algebra, const WeightAssignment& w);
LemmaReport structural_lemma_checks(const LieAlgebra& algebra, const WeightAssignment& w,
                                    const SeriesReport& series);

} // namespace nilgrade
