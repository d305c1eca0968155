#include "oracles.hpp"

#include "nilgrade/catalog.hpp"
#include "nilgrade/errors.hpp"
#include "nilgrade/grading.hpp"
#include "nilgrade/search.hpp"

#include <doctest.h>

using namespace nilgrade;

namespace {

WeightAssignment W(std::vector<int> w) { return WeightAssignment(std::move(w)); }

std::map<int, int> profile(const LieAlgebra& L, const std::vector<int>& w, int j) {
    return graded_betti(L, W(w), j).by_degree;
}

} // namespace

TEST_CASE("weight assignments") {
    CHECK(WeightAssignment::parse_csv("-1,-1,-2").weights() == std::vector<int>{-1, -1, -2});
    CHECK(WeightAssignment::parse_csv(" -1 , -3 ").to_csv() == "-1,-3");
    CHECK_THROWS_AS(WeightAssignment::parse_csv("-1,0"), InputError);
    CHECK_THROWS_AS(WeightAssignment::parse_csv("-1,x"), ParseError);
    CHECK_THROWS_AS(WeightAssignment::parse_csv(""), Error);
    CHECK_THROWS_AS(W({}), InputError);
    CHECK_THROWS_AS(W({-1, 2}), InputError);
    CHECK(W({-1, -3}).of(2) == -3);
    CHECK(W({-1, -3}).max_abs() == 3);
    CHECK(W({-1, -2}) < W({-1, -3}));
    CHECK(W({-1, -9}) < W({-2, -1}));
}

TEST_CASE("homogeneity examples") {
    const LieAlgebra& h = get("L3_2").algebra;
    CHECK(is_homogeneous(h, W({-1, -1, -2})).homogeneous);
    const auto bad = is_homogeneous(h, W({-1, -1, -1}));
    CHECK_FALSE(bad.homogeneous);
    CHECK(bad.violations == std::vector<BracketTriple>{{1, 2, 3}});
    CHECK(is_homogeneous(get("L6_24(0)").algebra, W({-1, -2, -1, -2, -3, -3})).homogeneous);
    CHECK_THROWS_AS(is_homogeneous(h, W({-1, -1})), InputError);
}

TEST_CASE("graded Betti examples") {
    const LieAlgebra& h = get("L3_2").algebra;
    CHECK(profile(h, {-1, -1, -2}, 1) == std::map<int, int>{{1, 2}});
    CHECK(profile(h, {-1, -1, -2}, 2) == std::map<int, int>{{3, 2}});
    const LieAlgebra n = resolve("nmq:5,2");
    CHECK(profile(n, {-1, -1, -2, -1, -1}, 1) == std::map<int, int>{{1, 4}});
    CHECK(profile(n, {-1, -1, -2, -1, -1}, 2) == std::map<int, int>{{2, 5}});
    for (int m = 1; m <= 3; ++m) {
        const LieAlgebra ext = direct_sum_abelian(h, m);
        CHECK(profile(ext, extend_with_central(W({-1, -1, -2}), m).weights(), 1) ==
              std::map<int, int>{{1, 2}, {2, m}});
    }
    CHECK_THROWS_AS(graded_betti(h, W({-1, -1, -1}), 1), PreconditionError);
    CHECK_THROWS_AS(graded_betti(h, W({-1, -1, -2}), 3), InputError);
}

TEST_CASE("graded Betti numbers agree with the Koszul oracle") {
    for (const auto& entry : catalog()) {
        const LieAlgebra& L = entry.algebra;
        for (const auto& w : enumerate_gradings(L, 3))
            for (int j : {1, 2}) {
                if (j > L.dim()) continue;
                CHECK_MESSAGE(graded_betti(L, w, j).by_degree == oracle::graded_betti(L, w.weights(), j),
                              L.name() << " " << w.to_csv() << " j=" << j);
            }
    }
}

TEST_CASE("condition checks") {
    const auto h = check_conditions(get("L3_2").algebra, W({-1, -1, -2}));
    CHECK(h.homogeneous);
    CHECK(h.w == Verdict::pass);
    CHECK(h.h == Verdict::pass);
    CHECK(h.passes(Mode::wh));

    const auto f = check_conditions(get("L4_3").algebra, W({-1, -1, -2, -3}));
    CHECK(f.w == Verdict::pass);
    CHECK(f.h == Verdict::fail);
    CHECK(f.passes(Mode::w));
    CHECK_FALSE(f.passes(Mode::wh));
    bool component_offense = false;
    for (const auto& off : f.h_offenses)
        if (off.part == "component" && off.k == 3 && off.dim == 1) component_offense = true;
    CHECK(component_offense);
    CHECK(f.component_dims == std::map<int, int>{{-3, 1}, {-2, 1}, {-1, 2}});

    const auto bad = check_conditions(get("L3_2").algebra, W({-1, -1, -1}));
    CHECK_FALSE(bad.homogeneous);
    CHECK(bad.w == Verdict::not_evaluated);
    CHECK(bad.h == Verdict::not_evaluated);
    CHECK_FALSE(bad.passes(Mode::w));
}

TEST_CASE("the nmq family grading passes with the predicted dimensions") {
    for (auto [m, q] : {std::pair{7, 2}, {5, 2}, {8, 3}, {9, 4}}) {
        const FamilySpec spec{"nmq", {m, q}};
        const LieAlgebra L = family(spec);
        const auto w = family_grading(spec);
        REQUIRE(w.has_value());
        const auto report = check_conditions(L, *w);
        CHECK(report.passes(Mode::wh));
        REQUIRE(report.h1.has_value());
        REQUIRE(report.h2.has_value());
        CHECK(report.h1->by_degree.at(1) == 2 * q);
        const auto h23 = report.h2->by_degree.find(3);
        CHECK((h23 == report.h2->by_degree.end() ? 0 : h23->second) == 2 * q * (m - 2 * q - 1));
    }
}

TEST_CASE("doubling weights") {
    CHECK(double_weights(W({-1, -1, -2})) == W({-2, -2, -4}));
    const auto doubled = check_conditions(get("L3_2").algebra, W({-2, -2, -4}));
    CHECK(doubled.h == Verdict::pass);
    CHECK(doubled.w == Verdict::fail);
}

TEST_CASE("structural lemma checks") {
    const auto l59 = structural_lemma_checks(get("L5_9").algebra, W({-1, -1, -2, -3, -3}));
    CHECK(l59.grading_length == 3);
    CHECK(l59.nilpotency_class == 3);
    CHECK(l59.ok());
    const auto c2 = structural_lemma_checks(LieAlgebra("C2", 2, {}), W({-1, -1}));
    CHECK(c2.grading_length == 1);
    CHECK(c2.nilpotency_class == 1);
    CHECK(c2.ok());
    const auto l43 = structural_lemma_checks(get("L4_3").algebra, W({-1, -1, -2, -3}));
    CHECK(l43.grading_length == 3);
    CHECK(l43.ok());
    CHECK_THROWS_AS(structural_lemma_checks(get("L3_2").algebra, W({-1, -1, -1})), PreconditionError);

    for (const auto& entry : catalog())
        for (const auto& w : enumerate_gradings(entry.algebra, 3))
            CHECK_MESSAGE(structural_lemma_checks(entry.algebra, w).ok(), entry.name << " " << w.to_csv());
}

TEST_CASE("extension by central generators keeps a WH grading") {
    for (const auto& entry : catalog()) {
        if (entry.algebra.dim() > 5 || !entry.expected.grading || entry.expected.wh != Expect::yes) continue;
        for (int m = 1; m <= 3; ++m) {
            const auto report = check_conditions(direct_sum_abelian(entry.algebra, m),
                                                 extend_with_central(*entry.expected.grading, m));
            CHECK_MESSAGE(report.passes(Mode::wh), entry.name << " m=" << m);
        }
    }
}
