#include "nilgrade/search.hpp"

#include "nilgrade/errors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>

namespace nilgrade {

WeightConstraintSystem constraint_system(const LieAlgebra& algebra, int bound) {
    if (bound < 1) throw InputError("weight bound must be at least 1, got " + std::to_string(bound));
    std::set<std::tuple<int, int, int>> support;
    for (const auto& e : algebra.brackets()) support.emplace(e.i, e.j, e.k);
    WeightConstraintSystem system;
    system.n = algebra.dim();
    system.bound = bound;
    for (const auto& [i, j, k] : support) system.equations.push_back({i, j, k});
    return system;
}

namespace {

/// Depth-first enumeration over absolute values a_v = -w_v, variables in index order.
class Enumerator {
public:
    /// Sum of |w_i| over `indices` may not exceed `limit`; checked once every index is assigned.
    struct DegreeCap {
        std::vector<int> indices;
        int limit;
    };

    explicit Enumerator(const WeightConstraintSystem& system, const std::vector<DegreeCap>& caps = {})
        : system_(system) {
        const int n = system.n;
        forced_.assign(n + 1, -1);
        checks_.resize(n + 1);
        for (std::size_t e = 0; e < system.equations.size(); ++e) {
            const auto& eq = system.equations[e];
            if (eq.k == eq.i || eq.k == eq.j) infeasible_ = true; // forces a zero weight
            const int top = std::max(eq.j, eq.k);
            checks_[top].push_back(e);
            if (forced_[top] < 0) forced_[top] = static_cast<int>(e);
        }
        values_.assign(n + 1, 0);
        caps_.resize(n + 1);
        for (const auto& cap : caps) caps_[*std::max_element(cap.indices.begin(), cap.indices.end())].push_back(cap);
    }

    /// Enumerates assignments with a_1 = first (or every a_1 when first == 0).
    void run(int first, const std::function<bool(const WeightAssignment&)>& visit) {
        if (infeasible_) return;
        visit_ = &visit;
        stopped_ = false;
        if (first == 0) {
            descend(1);
        } else {
            values_[1] = first;
            if (consistent(1)) descend(2);
        }
    }

private:
    bool consistent(int v) const {
        for (std::size_t e : checks_[v]) {
            const auto& eq = system_.equations[e];
            if (values_[eq.i] + values_[eq.j] != values_[eq.k]) return false;
        }
        for (const auto& cap : caps_[v]) {
            int degree = 0;
            for (int i : cap.indices) degree += values_[i];
            if (degree > cap.limit) return false;
        }
        return true;
    }

    void descend(int v) {
        if (stopped_) return;
        if (v > system_.n) {
            std::vector<int> w(system_.n);
            for (int i = 0; i < system_.n; ++i) w[i] = -values_[i + 1];
            if (!(*visit_)(WeightAssignment(std::move(w)))) stopped_ = true;
            return;
        }
        if (forced_[v] >= 0) {
            const auto& eq = system_.equations[forced_[v]];
            const int value = v == eq.k ? values_[eq.i] + values_[eq.j] : values_[eq.k] - values_[eq.i];
            if (value < 1 || value > system_.bound) return;
            values_[v] = value;
            if (consistent(v)) descend(v + 1);
            return;
        }
        for (int value = 1; value <= system_.bound && !stopped_; ++value) {
            values_[v] = value;
            if (consistent(v)) descend(v + 1);
        }
    }

    const WeightConstraintSystem& system_;
    std::vector<int> forced_;
    std::vector<std::vector<std::size_t>> checks_;
    std::vector<std::vector<DegreeCap>> caps_;
    std::vector<int> values_;
    bool infeasible_ = false;
    bool stopped_ = false;
    const std::function<bool(const WeightAssignment&)>* visit_ = nullptr;
};

/// Runs task(t) for t in [0, count) on up to `jobs` threads.
template <class Task>
void run_tasks(int count, int jobs, Task&& task) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int t = 0; t < count; ++t) task(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j)
        workers.emplace_back([&] {
            for (int t = next++; t < count; t = next++) task(t);
        });
    for (auto& worker : workers) worker.join();
}

} // namespace

void enumerate_gradings(const WeightConstraintSystem& system,
                        const std::function<bool(const WeightAssignment&)>& visit) {
    Enumerator(system).run(0, visit);
}

std::vector<WeightAssignment> enumerate_gradings(const LieAlgebra& algebra, int bound) {
    std::vector<WeightAssignment> out;
    enumerate_gradings(constraint_system(algebra, bound), [&](const WeightAssignment& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::vector<WeightAssignment> enumerate_gradings(const LieAlgebra& algebra, int bound, int jobs) {
    const auto system = constraint_system(algebra, bound);
    std::vector<std::vector<WeightAssignment>> parts(bound);
    run_tasks(bound, jobs, [&](int t) {
        Enumerator(system).run(t + 1, [&](const WeightAssignment& w) {
            parts[t].push_back(w);
            return true;
        });
    });
    std::vector<WeightAssignment> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

GradingEvaluator::GradingEvaluator(const LieAlgebra& algebra) {
    for (int j : {1, 2}) {
        if (j > algebra.dim()) continue;
        auto& target = j == 1 ? h1_ : h2_;
        for (const auto& block : multigraded_cohomology(algebra, j)) {
            Block b{{}, block.dim};
            for (int i : block.representative) b.indices.push_back(i - 1);
            target.push_back(std::move(b));
        }
    }
}

GradingEvaluator::Profiles GradingEvaluator::profiles(const WeightAssignment& w) const {
    Profiles out;
    const auto& weights = w.weights();
    for (const auto& b : h1_) out.h1[-weights[b.indices[0]]] += b.dim;
    for (const auto& b : h2_) out.h2[-weights[b.indices[0]] - weights[b.indices[1]]] += b.dim;
    return out;
}

bool GradingEvaluator::passes(const WeightAssignment& w, Mode mode) const {
    const auto& weights = w.weights();
    // Degrees above 4 already violate (W), so only 1..4 need tallies.
    int h1[5] = {0, 0, 0, 0, 0};
    int h2[5] = {0, 0, 0, 0, 0};
    for (const auto& b : h1_) {
        const int k = -weights[b.indices[0]];
        if (k > 2) return false;
        h1[k] += b.dim;
    }
    for (const auto& b : h2_) {
        const int k = -weights[b.indices[0]] - weights[b.indices[1]];
        if (k > 4) return false;
        h2[k] += b.dim;
    }
    if (mode == Mode::w) return true;
    if (h1[1] % 2 || h2[3] % 2) return false;
    std::map<int, int> components;
    for (int x : weights) ++components[-x];
    for (const auto& [k, dim] : components)
        if (k % 2 == 1 && dim % 2 == 1) return false;
    return true;
}

std::string GuardAlarm::message() const {
    std::string out = "theorem guard: " + algebra + " with weights " + weights + ":";
    for (std::size_t r = 0; r < reasons.size(); ++r) out += (r ? "; " : " ") + reasons[r];
    return out;
}

std::optional<GuardAlarm> theorem_guard(const LieAlgebra& algebra, const WeightAssignment& w) {
    const SeriesReport series = lower_central_series(algebra);
    const auto p = p_filiform_degree(series);
    const int n = algebra.dim();
    if (!p || n < *p + 3) return std::nullopt;

    GuardAlarm alarm{algebra.name(), w.to_csv(), {}};
    alarm.reasons.push_back(std::to_string(*p) + "-filiform of dimension " + std::to_string(n) +
                            " >= p+3 admits a (W)+(H) grading");
    if (*p >= 2 && n >= 5) {
        int dim1 = 0, dim2 = 0;
        for (int x : w.weights()) {
            if (x == -1) ++dim1;
            if (x == -2) ++dim2;
        }
        if (dim1 == 0) alarm.reasons.push_back("n_{-1} is zero");
        if (dim2 == 0) alarm.reasons.push_back("n_{-2} is zero");
        if (is_homogeneous(algebra, w).homogeneous) {
            const auto h1 = graded_betti(algebra, w, 1);
            const auto it = h1.by_degree.find(2);
            const int h12 = it == h1.by_degree.end() ? 0 : it->second;
            if (dim2 != h12 + 1)
                alarm.reasons.push_back("dim n_{-2} = " + std::to_string(dim2) + " differs from dim H^1_2 + 1 = " +
                                        std::to_string(h12 + 1));
        }
    }
    return alarm;
}

SearchOutcome find_grading(const LieAlgebra& algebra, int bound, Mode mode, int jobs, bool all) {
    const auto system = constraint_system(algebra, bound);
    const GradingEvaluator evaluator(algebra);
    // Every H^1 block must sit in degree <= 2 and every H^2 block in degree <= 4 under (W),
    // which both modes require, so partial assignments breaking a cap are cut early.
    std::vector<Enumerator::DegreeCap> caps;
    for (const auto& block : multigraded_cohomology(algebra, 1)) caps.push_back({block.representative, 2});
    if (algebra.dim() >= 2)
        for (const auto& block : multigraded_cohomology(algebra, 2)) caps.push_back({block.representative, 4});

    std::vector<std::vector<WeightAssignment>> hits(bound);
    std::atomic<int> first_hit_task{bound};
    run_tasks(bound, jobs, [&](int t) {
        if (!all && t > first_hit_task.load()) return;
        Enumerator(system, caps).run(t + 1, [&](const WeightAssignment& w) {
            if (!all && t > first_hit_task.load()) return false;
            if (!evaluator.passes(w, mode)) return true;
            hits[t].push_back(w);
            if (all) return true;
            int current = first_hit_task.load();
            while (t < current && !first_hit_task.compare_exchange_weak(current, t)) {
            }
            return false;
        });
    });

    SearchOutcome outcome;
    outcome.mode = mode;
    outcome.bound = bound;
    for (auto& part : hits) {
        for (auto& w : part) {
            outcome.found.push_back(std::move(w));
            if (!all) break;
        }
        if (!all && !outcome.found.empty()) break;
    }
    outcome.exhausted = all || outcome.found.empty();

    if (outcome.found.empty()) return outcome;
    const SeriesReport series = lower_central_series(algebra);
    for (const auto& w : outcome.found) {
        const ConditionReport report = check_conditions(algebra, w);
        if (!report.passes(mode))
            outcome.alarms.push_back("re-verification failed for weights " + w.to_csv());
        const LemmaReport lemmas = structural_lemma_checks(algebra, w, series);
        if (!lemmas.ok())
            outcome.alarms.push_back("structural lemma check failed for weights " + w.to_csv());
        if (report.passes(Mode::wh))
            if (auto alarm = theorem_guard(algebra, w)) outcome.alarms.push_back(alarm->message());
    }
    return outcome;
}

} // namespace nilgrade
