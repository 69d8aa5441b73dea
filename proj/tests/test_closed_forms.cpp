#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realbetti/closed_forms.hpp"
#include "realbetti/golden.hpp"

using namespace realbetti;
using namespace realbetti::closed_forms;
using series::extract_polynomial;
using series::FactorProduct;
using series::is_palindromic;
using series::series_from_factors;
using series::TruncatedSeries;

TEST_CASE("gauge series collapses to (1+t)^g/(1-t) at rank 1") {
    for (int g = 0; g <= 5; ++g) {
        for (int a = 0; a <= g + 1; ++a) {
            const auto lhs = gauge_classifying_series({g, a}, 1, 30);
            const auto rhs = series_from_factors({{{+1, 1, g}, {-1, 1, -1}}, 0}, 30);
            CHECK_MESSAGE(lhs == rhs, "g=", g, " a=", a);
        }
    }
}

TEST_CASE("gauge series, rank 2 spot value") {
    // equals (1+t)(1+t^3)^2/(1-t)^3 at g=2, a=1
    const auto lhs = gauge_classifying_series({2, 1}, 2, 40);
    const auto rhs = series_from_factors({{{+1, 1, 1}, {+1, 3, 2}, {-1, 1, -3}}, 0}, 40);
    CHECK(lhs == rhs);
    CHECK_THROWS_WITH_AS(gauge_classifying_series({2, 4}, 2, 10),
                         doctest::Contains("InvalidTopology"), Error);
}

TEST_CASE("loop group series") {
    const auto geo = series_from_factors({{{-1, 1, -1}}, 0}, 20);
    CHECK(loop_group_series(1, LoopKind::Fixed, 20) == geo);
    CHECK(loop_group_series(1, LoopKind::Antipodal, 20) == geo);

    // rank 2 fixed: (1+t)/((1-t)(1-t^2))
    const auto rhs = series_from_factors({{{+1, 1, 1}, {-1, 1, -1}, {-1, 2, -1}}, 0}, 40);
    CHECK(loop_group_series(2, LoopKind::Fixed, 40) == rhs);
}

TEST_CASE("classical group series") {
    CHECK(classical_group_series(ClassicalFamily::O, 1, 10) ==
          series_from_factors({{{-1, 1, -1}}, 0}, 10));

    const auto u2 = classical_group_series(ClassicalFamily::U, 2, 6);
    CHECK(u2.coeffs == std::vector<Int>{1, 0, 1, 0, 2, 0, 2});

    const auto o_inf = classical_group_series(ClassicalFamily::O, std::nullopt, 5);
    CHECK(o_inf.coeffs == std::vector<Int>{1, 1, 2, 3, 5, 7});

    CHECK(classical_group_series(ClassicalFamily::Sp, 1, 8) ==
          series_from_factors({{{-1, 4, -1}}, 0}, 8));
    CHECK(classical_group_series(ClassicalFamily::U, 0, 5) == TruncatedSeries::constant(1, 5));
}

TEST_CASE("low-rank closed forms match every published polynomial") {
    for (const auto& section : golden::sections()) {
        for (const auto& row : section.rows) {
            const int deg = section.rank * section.rank * (section.genus - 1) + 1;
            const auto s = low_rank_moduli_closed_form(
                section.rank, {section.genus, row.circles}, deg + 10);
            const auto poly = extract_polynomial(s, deg);
            CHECK_MESSAGE(poly.coeffs == row.coeffs, section.name, " a=", row.circles);
        }
    }
}

TEST_CASE("rank 1 closed form is (1+t)^g") {
    const auto s = low_rank_moduli_closed_form(1, {5, 1}, 20);
    CHECK(s == series_from_factors({{{+1, 1, 5}}, 0}, 20));
}

TEST_CASE("closed forms are palindromic of the expected degree") {
    for (int r = 1; r <= 3; ++r) {
        for (int g = 2; g <= 5; ++g) {
            const int deg = r * r * (g - 1) + 1;
            for (int a = 1; a <= g + 1; ++a) {
                const auto poly =
                    extract_polynomial(low_rank_moduli_closed_form(r, {g, a}, deg + 10), deg);
                CHECK(poly.degree() == deg);
                CHECK(is_palindromic(poly));
                CHECK(poly.coeffs[0] == 1);
                for (const Int& c : poly.coeffs) CHECK(c > 0);
            }
        }
    }
}

TEST_CASE("closed-form domain errors") {
    CHECK_THROWS_WITH_AS(low_rank_moduli_closed_form(2, {2, 0}, 20),
                         doctest::Contains("InvalidTopology"), Error);
    CHECK_THROWS_WITH_AS(low_rank_moduli_closed_form(4, {2, 1}, 20),
                         doctest::Contains("UnsupportedRank"), Error);
}

TEST_CASE("genus-zero stable series") {
    const auto complex_side = genus_zero_stable_series(FormulaTag::GenusZeroStableComplex, 12);
    const auto u = classical_group_series(ClassicalFamily::U, std::nullopt, 12);
    CHECK(complex_side == series::series_mul(u, u));

    const auto real_a = genus_zero_stable_series(FormulaTag::GenusZeroStableRealA, 12);
    const auto o = classical_group_series(ClassicalFamily::O, std::nullopt, 12);
    CHECK(real_a == series::series_mul(o, o));
}

TEST_CASE("formula tags round-trip through names") {
    for (int i = 0; i < 12; ++i) {
        const auto tag = static_cast<FormulaTag>(i);
        const auto parsed = parse_formula_tag(formula_tag_name(tag));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == tag);
    }
    CHECK_FALSE(parse_formula_tag("NoSuchFormula").has_value());
}
