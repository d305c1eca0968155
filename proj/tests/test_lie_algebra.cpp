#include "oracles.hpp"

#include "nilgrade/catalog.hpp"
#include "nilgrade/cochain.hpp"
#include "nilgrade/errors.hpp"
#include "nilgrade/lie_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace nilgrade;

namespace {

Vector random_vector(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Vector v(n);
    for (auto& x : v) {
        x = Scalar(num(rng), den(rng));
        x.canonicalize();
    }
    return v;
}

Vector add(const Vector& a, const Vector& b, const Scalar& s = 1) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
    return out;
}

} // namespace

TEST_CASE("malformed entries are input errors") {
    CHECK_THROWS_AS(LieAlgebra("x", 3, {{1, 4, 3, 1}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("x", 3, {{2, 1, 3, 1}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("x", 3, {{1, 1, 3, 1}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("x", 3, {{1, 2, 3, 0}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("x", 3, {{1, 2, 3, 1}, {1, 2, 3, 2}}), InputError);
    CHECK_THROWS_AS(LieAlgebra("x", 0, {}), InputError);
    CHECK(oriented_entry(3, 1, 2, 5) == BracketEntry{1, 3, 2, -5});
}

TEST_CASE("Jacobi validation examples") {
    CHECK(validate(get("L3_2").algebra).ok);
    CHECK(validate(LieAlgebra("C4", 4, {})).ok);

    const LieAlgebra bogus("bogus", 5, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 3, 4, 1}, {1, 4, 5, 1}});
    const ValidationReport report = validate(bogus);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations)
        if (v.i == 1 && v.j == 2 && v.k == 3) found = true;
    CHECK(found);
    CHECK_FALSE(oracle::jacobi_holds(bogus));
}

TEST_CASE("Jacobi validation agrees with the dense tensor oracle") {
    for (const auto& entry : catalog()) CHECK(validate(entry.algebra).ok == oracle::jacobi_holds(entry.algebra));
    // The printed L6_15 law ([X2,X5]=X6 in place of [X1,X5]=X6).
    const LieAlgebra printed("L6_15 printed", 6,
                             {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}, {2, 4, 6, 1}, {2, 5, 6, 1}});
    CHECK_FALSE(validate(printed).ok);
    CHECK_FALSE(oracle::jacobi_holds(printed));
}

TEST_CASE("bracket examples") {
    const LieAlgebra& h = get("L3_2").algebra;
    CHECK(bracket(h, basis_vector(3, 1), basis_vector(3, 2)) == basis_vector(3, 3));
    CHECK(bracket(h, basis_vector(3, 2), basis_vector(3, 1)) == Vector{0, 0, -1});
    const Vector u{Scalar(1, 2), 3, -1};
    CHECK(bracket(h, u, u) == Vector(3, Scalar(0)));
    CHECK_THROWS_AS(bracket(h, Vector{1, 0}, u), InputError);

    // nmq:5,2 on (X0, X1, X2, Y1, Y2): [Y1, Y2] = X2.
    const LieAlgebra n52 = resolve("nmq:5,2");
    CHECK(bracket(n52, basis_vector(5, 4), basis_vector(5, 5)) == basis_vector(5, 3));
}

TEST_CASE("bracket is bilinear and antisymmetric on random rational vectors") {
    std::mt19937 rng(99);
    for (const char* name : {"L5_9", "L6_19(-1)", "L6_22(1)", "L6_24(1)", "L6_28"}) {
        const LieAlgebra& L = get(name).algebra;
        const int n = L.dim();
        for (int trial = 0; trial < 20; ++trial) {
            const Vector u = random_vector(rng, n), v = random_vector(rng, n), w = random_vector(rng, n);
            Scalar s(trial - 7, 3);
            s.canonicalize();
            CHECK(bracket(L, u, v) == add(Vector(n, Scalar(0)), bracket(L, v, u), -1));
            CHECK(bracket(L, add(u, w, s), v) == add(bracket(L, u, v), bracket(L, w, v), s));
            CHECK(bracket(L, u, add(v, w, s)) == add(bracket(L, u, v), bracket(L, u, w), s));
        }
    }
}

TEST_CASE("lower central series examples") {
    const auto l43 = lower_central_series(get("L4_3").algebra);
    CHECK(l43.dims == std::vector<int>{4, 2, 1, 0});
    CHECK(l43.nilpotency_class == 3);
    const auto c4 = lower_central_series(LieAlgebra("C4", 4, {}));
    CHECK(c4.dims == std::vector<int>{4, 0});
    CHECK(c4.nilpotency_class == 1);
    const auto l58 = lower_central_series(get("L5_8").algebra);
    CHECK(l58.dims == std::vector<int>{5, 2, 0});
    CHECK(l58.nilpotency_class == 2);

    // [X1, X2] = X2 is a Lie algebra but C^1 = C^2 = <X2>.
    CHECK_THROWS_AS(lower_central_series(LieAlgebra("solvable", 2, {{1, 2, 2, 1}})), NotNilpotent);
}

TEST_CASE("series terms are nested and dim C^1 = n - b_1") {
    for (const auto& entry : catalog()) {
        const auto series = lower_central_series(entry.algebra);
        for (std::size_t i = 1; i < series.terms.size(); ++i) {
            CHECK(series.terms[i].is_subspace_of(series.terms[i - 1]));
            CHECK(series.dims[i] < series.dims[i - 1]);
        }
        CHECK(series.dims.back() == 0);
        if (series.dims.size() > 1) CHECK(series.dims[1] == entry.algebra.dim() - betti(entry.algebra, 1));
    }
}

TEST_CASE("p-filiform examples") {
    CHECK(p_filiform_degree(get("L4_3").algebra) == 1);
    CHECK(p_filiform_degree(get("L6_10").algebra) == 3);
    CHECK_FALSE(p_filiform_degree(get("L5_8").algebra).has_value());
    CHECK(p_filiform_degree(get("L3_2").algebra) == 1);
}

TEST_CASE("direct sums with abelian algebras") {
    CHECK(direct_sum_abelian(get("L3_2").algebra, 1).same_structure(get("L4_2").algebra));
    CHECK(direct_sum_abelian(get("L4_3").algebra, 2).same_structure(get("L6_3").algebra));
    CHECK(direct_sum_abelian(get("L5_8").algebra, 0).same_structure(get("L5_8").algebra));
    CHECK(direct_sum_abelian(get("L3_2").algebra, 2).name() == "L3_2+C^2");
    CHECK_THROWS_AS(direct_sum_abelian(get("L3_2").algebra, -1), InputError);

    for (const auto& entry : catalog()) {
        const auto p = p_filiform_degree(entry.algebra);
        for (int m = 1; m <= 3; ++m) {
            const auto q = p_filiform_degree(direct_sum_abelian(entry.algebra, m));
            if (p && q) CHECK(*q == *p + m);
        }
    }
}

TEST_CASE("basis changes preserve the structure invariants") {
    const LieAlgebra& L = get("L5_9").algebra;
    CHECK(change_basis(L, RationalMatrix::identity(5)).same_structure(L));

    // Swap X1 and X2: [Y1, Y2] = [X2, X1] = -X3.
    auto swap = RationalMatrix::identity(3);
    swap(0, 0) = 0, swap(0, 1) = 1, swap(1, 0) = 1, swap(1, 1) = 0;
    const LieAlgebra swapped = change_basis(get("L3_2").algebra, swap);
    CHECK(swapped.brackets() == std::vector<BracketEntry>{{1, 2, 3, -1}});

    std::mt19937 rng(5);
    for (const char* name : {"L5_9", "L6_22(0)", "L6_25"}) {
        const LieAlgebra& A = get(name).algebra;
        const int n = A.dim();
        RationalMatrix p = RationalMatrix::identity(n);
        std::uniform_int_distribution<int> val(-2, 2);
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) p(r, c) = val(rng);
        const LieAlgebra B = change_basis(A, p);
        CHECK(validate(B).ok);
        CHECK(lower_central_series(B).dims == lower_central_series(A).dims);
        CHECK(betti_vector(B, n) == betti_vector(A, n));
    }
    CHECK_THROWS_AS(change_basis(L, RationalMatrix(5, 5)), InputError);
    CHECK_THROWS_AS(change_basis(L, RationalMatrix::identity(4)), InputError);
}
