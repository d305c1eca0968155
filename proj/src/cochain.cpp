#include "nilgrade/cochain.hpp"

#include "nilgrade/errors.hpp"

#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace nilgrade {

namespace {

void check_degree(int n, int k) {
    if (k < 0 || k > n)
        throw InputError("form degree " + std::to_string(k) + " out of range 0.." + std::to_string(n));
}

std::uint64_t mask_of(const KFormIndex& form) {
    std::uint64_t mask = 0;
    for (int i : form) mask |= std::uint64_t{1} << (i - 1);
    return mask;
}

/// Sign of the permutation sorting `seq` (entries distinct).
int sort_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

using Key = std::vector<long>;

Key form_key(const KFormIndex& form, const WeightLattice& lattice) {
    Key key(lattice.rank, 0);
    for (int i : form)
        for (int t = 0; t < lattice.rank; ++t) key[t] += lattice.multidegree[i - 1][t];
    return key;
}

/// Rank of d on Λ^k restricted to each multigraded block, keyed by multidegree.
std::map<Key, std::size_t> block_ranks(const LieAlgebra& algebra, int k, const WeightLattice& lattice) {
    std::map<Key, std::size_t> out;
    const int n = algebra.dim();
    if (k < 0 || k >= n) return out;
    const auto cols = k_form_basis(n, k);
    const auto rows = k_form_basis(n, k + 1);
    const SparseMatrix d = ce_differential_sparse(algebra, k);

    std::map<Key, std::vector<std::size_t>> col_blocks, row_blocks;
    for (std::size_t c = 0; c < cols.size(); ++c) col_blocks[form_key(cols[c], lattice)].push_back(c);
    for (std::size_t r = 0; r < rows.size(); ++r) row_blocks[form_key(rows[r], lattice)].push_back(r);

    std::vector<long> local(rows.size(), -1);
    for (const auto& [key, block_cols] : col_blocks) {
        auto it = row_blocks.find(key);
        if (it == row_blocks.end()) {
            out[key] = 0;
            continue;
        }
        const auto& block_rows = it->second;
        for (std::size_t r = 0; r < block_rows.size(); ++r) local[block_rows[r]] = static_cast<long>(r);
        // Transposed block (one row per column of d) has the same rank and stays row-major friendly.
        RationalMatrix block(block_cols.size(), block_rows.size());
        for (std::size_t c = 0; c < block_cols.size(); ++c)
            for (const auto& e : d.column(block_cols[c])) {
                if (local[e.row] < 0) throw std::logic_error("differential leaves its multigraded block");
                block(c, static_cast<std::size_t>(local[e.row])) = e.value;
            }
        out[key] = rank(block);
        for (std::size_t r : block_rows) local[r] = -1;
    }
    return out;
}

} // namespace

std::vector<KFormIndex> k_form_basis(int n, int k) {
    check_degree(n, k);
    std::vector<KFormIndex> out;
    KFormIndex current(k);
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.push_back(current);
        int pos = k - 1;
        while (pos >= 0 && current[pos] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int t = pos + 1; t < k; ++t) current[t] = current[t - 1] + 1;
    }
    return out;
}

SparseMatrix ce_differential_sparse(const LieAlgebra& algebra, int k) {
    const int n = algebra.dim();
    check_degree(n, k);
    if (n > 64) throw InputError("cochain computations support dimension at most 64");
    const auto cols = k_form_basis(n, k);
    if (k == n) return SparseMatrix(0, cols.size());
    const auto rows = k_form_basis(n, k + 1);
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(mask_of(rows[r]), r);

    // dx_m = Σ over brackets (i, j, m, c) of -c x_i ∧ x_j.
    std::vector<std::vector<std::tuple<int, int, Scalar>>> dx(n + 1);
    for (const auto& e : algebra.brackets()) dx[e.k].emplace_back(e.i, e.j, -e.c);

    SparseMatrix d(rows.size(), cols.size());
    std::vector<int> seq(k + 1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const KFormIndex& form = cols[c];
        const std::uint64_t mask = mask_of(form);
        std::map<std::size_t, Scalar> acc;
        for (int t = 0; t < k; ++t) {
            const int m = form[t];
            const std::uint64_t rest = mask & ~(std::uint64_t{1} << (m - 1));
            for (const auto& [a, b, coeff] : dx[m]) {
                const std::uint64_t ab = (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
                if (rest & ab) continue;
                std::size_t pos = 0;
                for (int s = 0; s < t; ++s) seq[pos++] = form[s];
                seq[pos++] = a;
                seq[pos++] = b;
                for (int s = t + 1; s < k; ++s) seq[pos++] = form[s];
                const int sign = sort_sign(seq) * (t % 2 == 0 ? 1 : -1);
                Scalar& slot = acc[row_index.at(rest | ab)];
                if (sign > 0) slot += coeff;
                else slot -= coeff;
            }
        }
        std::vector<SparseMatrix::Entry> entries;
        for (auto& [r, v] : acc)
            if (sgn(v) != 0) entries.push_back({r, std::move(v)});
        d.set_column(c, std::move(entries));
    }
    return d;
}

RationalMatrix ce_differential(const LieAlgebra& algebra, int k) {
    return ce_differential_sparse(algebra, k).to_dense();
}

WeightLattice weight_lattice(const LieAlgebra& algebra) {
    const int n = algebra.dim();
    std::set<std::tuple<int, int, int>> support;
    for (const auto& e : algebra.brackets()) support.emplace(e.i, e.j, e.k);
    std::vector<Vector> equations;
    for (const auto& [i, j, k] : support) {
        Vector row(n);
        row[i - 1] += 1;
        row[j - 1] += 1;
        row[k - 1] -= 1;
        equations.push_back(std::move(row));
    }
    const RationalMatrix kernel = kernel_basis(RationalMatrix::from_rows(equations, n));

    WeightLattice lattice;
    lattice.rank = static_cast<int>(kernel.rows());
    lattice.multidegree.assign(n, std::vector<long>(lattice.rank, 0));
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Integer scale = 1;
        for (int c = 0; c < n; ++c)
            if (sgn(kernel(r, c)) != 0)
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), kernel(r, c).get_den_mpz_t());
        std::vector<Integer> ints(n);
        Integer g = 0;
        for (int c = 0; c < n; ++c) {
            Scalar scaled = kernel(r, c) * scale;
            ints[c] = scaled.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[c].get_mpz_t());
        }
        std::vector<long> gen(n);
        for (int c = 0; c < n; ++c) {
            Integer v = ints[c] / g;
            if (!v.fits_slong_p()) throw std::overflow_error("weight lattice generator too large");
            gen[c] = v.get_si();
            lattice.multidegree[c][r] = gen[c];
        }
        lattice.generators.push_back(std::move(gen));
    }
    return lattice;
}

std::size_t differential_rank(const LieAlgebra& algebra, int k) {
    check_degree(algebra.dim(), k);
    std::size_t total = 0;
    for (const auto& [key, r] : block_ranks(algebra, k, weight_lattice(algebra))) total += r;
    return total;
}

int betti(const LieAlgebra& algebra, int k) {
    const int n = algebra.dim();
    check_degree(n, k);
    const WeightLattice lattice = weight_lattice(algebra);
    std::size_t total = k_form_basis(n, k).size();
    for (int degree : {k, k - 1})
        for (const auto& [key, r] : block_ranks(algebra, degree, lattice)) total -= r;
    return static_cast<int>(total);
}

std::vector<int> betti_vector(const LieAlgebra& algebra, int max_degree) {
    const int n = algebra.dim();
    check_degree(n, max_degree);
    const WeightLattice lattice = weight_lattice(algebra);
    std::vector<std::size_t> ranks(n + 1, 0);
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& [key, r] : block_ranks(algebra, k, lattice)) ranks[k] += r;
    std::vector<int> out;
    for (int k = 0; k <= max_degree; ++k) {
        std::size_t b = k_form_basis(n, k).size() - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
        out.push_back(static_cast<int>(b));
    }
    return out;
}

std::vector<CohomologyBlock> multigraded_cohomology(const LieAlgebra& algebra, int j) {
    const int n = algebra.dim();
    check_degree(n, j);
    const WeightLattice lattice = weight_lattice(algebra);
    const auto outgoing = block_ranks(algebra, j, lattice);
    const auto incoming = block_ranks(algebra, j - 1, lattice);

    std::vector<CohomologyBlock> blocks;
    std::map<Key, std::size_t> position;
    for (const auto& form : k_form_basis(n, j)) {
        Key key = form_key(form, lattice);
        auto [it, inserted] = position.emplace(key, blocks.size());
        if (inserted) blocks.push_back({std::move(key), form, 0});
        ++blocks[it->second].dim;
    }
    std::vector<CohomologyBlock> out;
    for (auto& block : blocks) {
        auto lookup = [&](const std::map<Key, std::size_t>& ranks) {
            auto it = ranks.find(block.multidegree);
            return it == ranks.end() ? std::size_t{0} : it->second;
        };
        block.dim -= static_cast<int>(lookup(outgoing) + lookup(incoming));
        if (block.dim > 0) out.push_back(std::move(block));
    }
    return out;
}

} // namespace nilgrade
