#pragma once

#include "nilgrade/cochain.hpp"
#include "nilgrade/grading.hpp"
#include "nilgrade/lie_algebra.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nilgrade {

/// w_i + w_j = w_k.
struct WeightEquation {
    int i, j, k;
    friend bool operator==(const WeightEquation&, const WeightEquation&) = default;
};

struct WeightConstraintSystem {
    int n = 0;
    int bound = 0; ///< weights range over -1 .. -bound
    std::vector<WeightEquation> equations; ///< one per bracket support triple, sorted
};

/// Throws InputError if bound < 1.
WeightConstraintSystem constraint_system(const LieAlgebra& algebra, int bound);

/// Calls `visit` on every homogeneous assignment with weights in -1..-bound, in ascending
/// lexicographic order of (|w_1|, ..., |w_n|). Enumeration stops early when `visit` returns false.
void enumerate_gradings(const WeightConstraintSystem& system,
                        const std::function<bool(const WeightAssignment&)>& visit);
std::vector<WeightAssignment> enumerate_gradings(const LieAlgebra& algebra, int bound);
/// Same output as the serial version; work is split over the values of w_1.
std::vector<WeightAssignment> enumerate_gradings(const LieAlgebra& algebra, int bound, int jobs);

/// Evaluates (W) and (H) for homogeneous assignments from precomputed multigraded H^1 and H^2.
/// The result agrees with check_conditions on every homogeneous input.
class GradingEvaluator {
public:
    explicit GradingEvaluator(const LieAlgebra& algebra);

    struct Profiles {
        std::map<int, int> h1, h2; ///< degree -> dim, zero entries omitted
    };
    /// w must be homogeneous for `algebra`.
    Profiles profiles(const WeightAssignment& w) const;
    bool passes(const WeightAssignment& w, Mode mode) const;

private:
    struct Block {
        std::vector<int> indices; ///< 0-based basis indices of a representative form
        int dim;
    };
    std::vector<Block> h1_, h2_;
};

struct GuardAlarm {
    std::string algebra;
    std::string weights;
    std::vector<std::string> reasons;
    std::string message() const;
};

/// Reports a find that contradicts the non-existence results for p-filiform algebras.
/// Assumes w passed (W) and (H).
std::optional<GuardAlarm> theorem_guard(const LieAlgebra& algebra, const WeightAssignment& w);

struct SearchOutcome {
    Mode mode = Mode::wh;
    int bound = 0;
    std::vector<WeightAssignment> found;
    bool exhausted = false;
    std::vector<std::string> alarms;
};

/// First assignment in enumeration order passing `mode` (every one if `all`). Each hit is
/// re-verified with check_conditions, structural_lemma_checks and (for WH hits) theorem_guard;
/// any failure is recorded in `alarms`. Results do not depend on `jobs`.
SearchOutcome find_grading(const LieAlgebra& algebra, int bound, Mode mode, int jobs = 1, bool all = false);

} // namespace nilgrade
