#include "nilgrade/grading.hpp"

#include "nilgrade/cochain.hpp"
#include "nilgrade/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

namespace nilgrade {

WeightAssignment::WeightAssignment(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("weight assignment is empty");
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] >= 0)
            throw InputError("weight of X" + std::to_string(i + 1) + " is " + std::to_string(weights_[i]) +
                             "; weights must be <= -1");
}

WeightAssignment WeightAssignment::parse_csv(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view field = text.substr(start, end - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("invalid weight '" + std::string(field) + "' in list '" + std::string(text) + "'");
        out.push_back(value);
        start = end + 1;
    }
    return WeightAssignment(std::move(out));
}

std::string WeightAssignment::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(weights_[i]);
    }
    return out;
}

int WeightAssignment::max_abs() const { return -*std::min_element(weights_.begin(), weights_.end()); }

std::strong_ordering operator<=>(const WeightAssignment& a, const WeightAssignment& b) {
    const std::size_t n = std::min(a.weights_.size(), b.weights_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.weights_[i] != b.weights_[i]) return -a.weights_[i] <=> -b.weights_[i];
    return a.weights_.size() <=> b.weights_.size();
}

HomogeneityReport is_homogeneous(const LieAlgebra& algebra, const WeightAssignment& w) {
    if (w.size() != algebra.dim())
        throw InputError("weight assignment has " + std::to_string(w.size()) + " entries, algebra '" +
                         algebra.name() + "' has dimension " + std::to_string(algebra.dim()));
    HomogeneityReport report;
    for (const auto& e : algebra.brackets())
        if (w.of(e.i) + w.of(e.j) != w.of(e.k)) {
            report.homogeneous = false;
            report.violations.push_back({e.i, e.j, e.k});
        }
    return report;
}

int GradedBettiProfile::total() const {
    int sum = 0;
    for (const auto& [k, d] : by_degree) sum += d;
    return sum;
}

namespace {

int cochain_degree(const KFormIndex& form, const WeightAssignment& w) {
    int total = 0;
    for (int i : form) total -= w.of(i);
    return total;
}

/// Rank of d on Λ^k split by cochain degree; throws if d mixes degrees.
std::map<int, std::size_t> degree_block_ranks(const LieAlgebra& algebra, const WeightAssignment& w, int k) {
    std::map<int, std::size_t> out;
    const int n = algebra.dim();
    if (k < 0 || k >= n) return out;
    const auto cols = k_form_basis(n, k);
    const auto rows = k_form_basis(n, k + 1);
    const SparseMatrix d = ce_differential_sparse(algebra, k);

    std::vector<int> row_degree(rows.size());
    std::map<int, std::vector<std::size_t>> col_blocks, row_blocks;
    for (std::size_t c = 0; c < cols.size(); ++c) col_blocks[cochain_degree(cols[c], w)].push_back(c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        row_degree[r] = cochain_degree(rows[r], w);
        row_blocks[row_degree[r]].push_back(r);
    }
    std::vector<long> local(rows.size(), -1);
    for (const auto& [degree, block_cols] : col_blocks) {
        const auto& block_rows = row_blocks[degree];
        for (std::size_t r = 0; r < block_rows.size(); ++r) local[block_rows[r]] = static_cast<long>(r);
        RationalMatrix block(block_cols.size(), block_rows.size());
        for (std::size_t c = 0; c < block_cols.size(); ++c)
            for (const auto& e : d.column(block_cols[c])) {
                if (row_degree[e.row] != degree)
                    throw std::logic_error("differential does not preserve cochain degree");
                block(c, static_cast<std::size_t>(local[e.row])) = e.value;
            }
        out[degree] = rank(block);
        for (std::size_t r : block_rows) local[r] = -1;
    }
    return out;
}

} // namespace

GradedBettiProfile graded_betti(const LieAlgebra& algebra, const WeightAssignment& w, int j) {
    if (j != 1 && j != 2) throw InputError("graded_betti supports j = 1 or 2");
    const auto hom = is_homogeneous(algebra, w);
    if (!hom.homogeneous) throw PreconditionError("weight assignment is not homogeneous");
    GradedBettiProfile profile;
    profile.j = j;
    if (j > algebra.dim()) return profile;
    std::map<int, int> counts;
    for (const auto& form : k_form_basis(algebra.dim(), j)) ++counts[cochain_degree(form, w)];
    const auto outgoing = degree_block_ranks(algebra, w, j);
    const auto incoming = degree_block_ranks(algebra, w, j - 1);
    for (const auto& [degree, count] : counts) {
        int dim = count;
        if (auto it = outgoing.find(degree); it != outgoing.end()) dim -= static_cast<int>(it->second);
        if (auto it = incoming.find(degree); it != incoming.end()) dim -= static_cast<int>(it->second);
        if (dim > 0) profile.by_degree[degree] = dim;
    }
    return profile;
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_evaluated: return "not evaluated";
    }
    return "?";
}

const char* to_string(Mode mode) { return mode == Mode::wh ? "wh" : "w"; }

Mode parse_mode(std::string_view text) {
    if (text == "wh") return Mode::wh;
    if (text == "w") return Mode::w;
    throw InputError("unknown mode '" + std::string(text) + "' (expected wh or w)");
}

bool ConditionReport::passes(Mode mode) const {
    if (!homogeneous || w != Verdict::pass) return false;
    return mode == Mode::w || h == Verdict::pass;
}

ConditionReport check_conditions(const LieAlgebra& algebra, const WeightAssignment& w) {
    ConditionReport report;
    auto hom = is_homogeneous(algebra, w);
    report.homogeneous = hom.homogeneous;
    report.violations = std::move(hom.violations);
    for (int weight : w.weights()) ++report.component_dims[weight];
    if (!report.homogeneous) return report;

    report.h1 = graded_betti(algebra, w, 1);
    report.h2 = graded_betti(algebra, w, 2);

    for (const auto& [k, dim] : report.h1->by_degree)
        if (k != 1 && k != 2) report.w_offenses.push_back({1, k, dim});
    for (const auto& [k, dim] : report.h2->by_degree)
        if (k < 2 || k > 4) report.w_offenses.push_back({2, k, dim});
    report.w = report.w_offenses.empty() ? Verdict::pass : Verdict::fail;

    for (const auto& [degree, dim] : report.component_dims)
        if ((-degree) % 2 == 1 && dim % 2 == 1) report.h_offenses.push_back({"component", -degree, dim});
    for (const auto* profile : {&*report.h1, &*report.h2})
        for (const auto& [k, dim] : profile->by_degree)
            if (k % 2 == 1 && dim % 2 == 1)
                report.h_offenses.push_back({profile->j == 1 ? "H1" : "H2", k, dim});
    report.h = report.h_offenses.empty() ? Verdict::pass : Verdict::fail;
    return report;
}

WeightAssignment double_weights(const WeightAssignment& w) {
    std::vector<int> out = w.weights();
    for (int& x : out) x *= 2;
    return WeightAssignment(std::move(out));
}

WeightAssignment extend_with_central(const WeightAssignment& w, int m, int weight) {
    if (m < 0) throw InputError("extend_with_central: m must be nonnegative");
    std::vector<int> out = w.weights();
    out.insert(out.end(), static_cast<std::size_t>(m), weight);
    return WeightAssignment(std::move(out));
}

LemmaReport structural_lemma_checks(const LieAlgebra& algebra, const WeightAssignment& w) {
    return structural_lemma_checks(algebra, w, lower_central_series(algebra));
}

LemmaReport structural_lemma_checks(const LieAlgebra& algebra, const WeightAssignment& w,
                                    const SeriesReport& series) {
    if (!is_homogeneous(algebra, w).homogeneous)
        throw PreconditionError("structural lemma checks need a homogeneous weight assignment");
    std::set<int, std::greater<>> distinct(w.weights().begin(), w.weights().end());
    const std::vector<int> levels(distinct.begin(), distinct.end()); // i_1 > i_2 > ...

    LemmaReport report;
    report.grading_length = static_cast<int>(levels.size());
    report.nilpotency_class = series.nilpotency_class;
    report.length_ok = report.grading_length >= report.nilpotency_class;

    const int n = algebra.dim();
    const int last = std::min<int>(report.grading_length, static_cast<int>(series.terms.size()) - 1);
    for (int k = 1; k <= last; ++k) {
        std::vector<bool> support(n);
        for (int i = 0; i < n; ++i) support[i] = w.weights()[i] < levels[k - 1];
        if (!series.terms[k].supported_on(support)) report.failed_inclusions.push_back(k);
    }
    return report;
}

} // namespace nilgrade
