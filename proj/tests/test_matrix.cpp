#include "oracles.hpp"

#include "nilgrade/errors.hpp"
#include "nilgrade/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace nilgrade;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int sparsity) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), zero(0, sparsity);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (zero(rng) == 0) m(r, c) = Scalar(num(rng), den(rng));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c).canonicalize();
    return m;
}

} // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(parse_scalar("3") == 3);
    CHECK(parse_scalar(" -2/4 ") == Scalar(-1, 2));
    CHECK(parse_scalar("+5/1") == 5);
    CHECK(to_string(parse_scalar("6/4")) == "3/2");
    CHECK(to_string(parse_scalar("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("zero matrix has rank 0 and full kernel") {
    const RationalMatrix z(3, 3);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z) == RationalMatrix::identity(3));
    CHECK(rref(z).rows() == 0);
    CHECK_FALSE(inverse(z).has_value());
}

TEST_CASE("small exact examples") {
    const auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(m * k.row_vector(0) == Vector{0, 0, 0});
    const auto r = rref(m);
    CHECK(r == RationalMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));

    const auto a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv == RationalMatrix::from_rows({{1, -1}, {-1, 2}}));
}

TEST_CASE("rank, kernel, rref and inverse agree with plain elimination on random matrices") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> size(1, 7);
        const std::size_t rows = size(rng), cols = size(rng);
        const RationalMatrix m = random_matrix(rng, rows, cols, trial % 4);
        const std::size_t r = rank(m);
        CHECK(r == oracle::rank(m.to_rows()));
        CHECK(rref(m).rows() == r);
        CHECK(rref(rref(m)) == rref(m));

        const RationalMatrix k = kernel_basis(m);
        CHECK(k.rows() + r == cols);
        for (std::size_t i = 0; i < k.rows(); ++i) CHECK(m * k.row_vector(i) == Vector(rows, Scalar(0)));

        if (rows == cols) {
            const auto inv = inverse(m);
            CHECK(inv.has_value() == (r == rows));
            if (inv) CHECK(m * *inv == RationalMatrix::identity(rows));
        }
    }
}

TEST_CASE("fraction-free echelon rows are integral with distinct increasing pivots") {
    const auto m = RationalMatrix::from_rows({{Scalar(1, 2), Scalar(1, 3)}, {Scalar(1, 4), Scalar(2, 3)}});
    const Echelon e = fraction_free_echelon(m);
    REQUIRE(e.pivots.size() == 2);
    CHECK(e.pivots[0] < e.pivots[1]);
}

TEST_CASE("sparse product matches the dense product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(rng, 4, 5, 2);
        const auto b = random_matrix(rng, 5, 3, 2);
        SparseMatrix sa(4, 5), sb(5, 3);
        for (std::size_t c = 0; c < 5; ++c) {
            std::vector<SparseMatrix::Entry> col;
            for (std::size_t r = 0; r < 4; ++r)
                if (a(r, c) != 0) col.push_back({r, a(r, c)});
            sa.set_column(c, col);
        }
        for (std::size_t c = 0; c < 3; ++c) {
            std::vector<SparseMatrix::Entry> col;
            for (std::size_t r = 0; r < 5; ++r)
                if (b(r, c) != 0) col.push_back({r, b(r, c)});
            sb.set_column(c, col);
        }
        CHECK(sa.to_dense() == a);
        CHECK((sa * sb).to_dense() == a * b);
    }
}
