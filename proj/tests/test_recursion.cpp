#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "realbetti/closed_forms.hpp"
#include "realbetti/curves.hpp"
#include "realbetti/recursion.hpp"

using namespace realbetti;
using curves::RealCurveTopology;
using recursion::BettiResult;
using recursion::Engine;
using recursion::Options;
using series::is_palindromic;
using series::series_from_factors;
using series::TruncatedSeries;

namespace {

std::vector<Int> ints(const std::vector<long long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("rank-1 semistable series equals the gauge series (no unstable strata)") {
    Engine eng;
    for (int g = 1; g <= 5; ++g) {
        for (int a = 0; a <= g + 1; ++a) {
            const long long d = (a == 0) ? 2 : 1;
            const auto got = eng.semistable_series(1, d, {g, a}, 25);
            const auto want = closed_forms::gauge_classifying_series({g, a}, 1, 25);
            CHECK_MESSAGE(got == want, "g=", g, " a=", a);
        }
    }
}

TEST_CASE("rank-2 semistable series, genus 2, one circle, odd degree") {
    // equals (1+t)^3 (1+t^2) / (1-t)
    Engine eng;
    const auto got = eng.semistable_series(2, 1, {2, 1}, 40);
    const auto want = series_from_factors({{{+1, 1, 3}, {+1, 2, 1}, {-1, 1, -1}}, 0}, 40);
    CHECK(got == want);
}

TEST_CASE("moduli Betti numbers, rank 2") {
    Engine eng;
    struct Row {
        int g, a;
        std::vector<long long> coeffs;
    };
    const Row rows[] = {
        {2, 1, {1, 3, 4, 4, 3, 1}},
        {2, 2, {1, 4, 7, 7, 4, 1}},
        {2, 3, {1, 5, 10, 10, 5, 1}},
        {3, 1, {1, 4, 8, 14, 21, 21, 14, 8, 4, 1}},
        {3, 2, {1, 5, 13, 25, 36, 36, 25, 13, 5, 1}},
        {3, 3, {1, 6, 19, 41, 61, 61, 41, 19, 6, 1}},
        {3, 4, {1, 7, 26, 62, 96, 96, 62, 26, 7, 1}},
    };
    for (const auto& row : rows) {
        const BettiResult res = eng.moduli_betti(2, 1, {row.g, row.a});
        CHECK_MESSAGE(res.polynomial.coeffs == ints(row.coeffs), "g=", row.g, " a=", row.a);
        CHECK(res.polynomial.degree() == 4 * (row.g - 1) + 1);
        CHECK(is_palindromic(res.polynomial));
    }
}

TEST_CASE("moduli Betti numbers, rank 3, genus 2") {
    Engine eng;
    struct Row {
        int a;
        std::vector<long long> coeffs;
    };
    const Row rows[] = {
        {1, {1, 3, 6, 12, 17, 18, 17, 12, 6, 3, 1}},
        {2, {1, 4, 11, 25, 40, 46, 40, 25, 11, 4, 1}},
        {3, {1, 5, 17, 44, 78, 94, 78, 44, 17, 5, 1}},
    };
    for (const auto& row : rows) {
        const BettiResult res = eng.moduli_betti(3, 1, {2, row.a});
        CHECK_MESSAGE(res.polynomial.coeffs == ints(row.coeffs), "a=", row.a);
        CHECK(res.polynomial.degree() == 10);
        CHECK(is_palindromic(res.polynomial));
    }
}

TEST_CASE("recursion agrees with the low-rank closed forms") {
    Engine eng;
    for (int r : {2, 3}) {
        for (int g = 2; g <= 4; ++g) {
            for (int a = 1; a <= g + 1; ++a) {
                for (long long d : {1LL, r + 1LL}) {
                    if (std::gcd(static_cast<long long>(r), d) != 1) continue;
                    const BettiResult res = eng.moduli_betti(r, d, {g, a});
                    const int deg = r * r * (g - 1) + 1;
                    const auto want = closed_forms::low_rank_moduli_closed_form(r, {g, a}, deg);
                    CHECK_MESSAGE(res.polynomial.coeffs == want.coeffs, "r=", r, " g=", g,
                                  " a=", a, " d=", d);
                }
            }
        }
    }
}

TEST_CASE("input validation") {
    Engine eng;
    CHECK_THROWS_WITH_AS(eng.moduli_betti(2, 2, {2, 1}), doctest::Contains("NotCoprime"), Error);
    CHECK_THROWS_WITH_AS(eng.moduli_betti(2, 1, {1, 1}), doctest::Contains("InvalidInput"),
                         Error);  // extraction needs g >= 2
    CHECK_THROWS_WITH_AS(eng.moduli_betti(2, 1, {2, 4}), doctest::Contains("InvalidTopology"),
                         Error);
    CHECK_THROWS_WITH_AS(eng.semistable_series(2, 1, {0, 1}, 10),
                         doctest::Contains("InvalidInput"), Error);  // needs g >= 1
    CHECK_THROWS_WITH_AS(eng.semistable_series(2, 1, {2, 0}, 10),
                         doctest::Contains("InvalidInput"), Error);  // a = 0 forces even d
    CHECK_THROWS_WITH_AS(eng.semistable_series(0, 0, {2, 1}, 10),
                         doctest::Contains("InvalidInput"), Error);
}

TEST_CASE("truncation order does not change retained coefficients") {
    Engine eng;
    const auto lo = eng.semistable_series(3, 1, {2, 1}, 12);
    const auto hi = eng.semistable_series(3, 1, {2, 1}, 25);
    REQUIRE(lo.order == 12);
    for (int n = 0; n <= 12; ++n) CHECK(lo[n] == hi[n]);

    const BettiResult base = eng.moduli_betti(3, 1, {2, 2});
    const BettiResult more = eng.moduli_betti(3, 1, {2, 2}, base.order + 15);
    CHECK(more.order == base.order + 15);
    CHECK(base.polynomial == more.polynomial);

    // an override below the default is a no-op, never a weakening
    const BettiResult low = eng.moduli_betti(3, 1, {2, 2}, 3);
    CHECK(low.order == base.order);
}

TEST_CASE("degree shifts by the rank leave the answer unchanged") {
    Engine eng;
    for (int r : {2, 3}) {
        const BettiResult base = eng.moduli_betti(r, 1, {2, 2});
        for (long long d : {1LL + r, 1LL + 2 * r, 1LL - r}) {
            const BettiResult res = eng.moduli_betti(r, d, {2, 2});
            CHECK_MESSAGE(res.polynomial == base.polynomial, "r=", r, " d=", d);
        }
    }
}

TEST_CASE("raw-degree evaluation agrees with the normalized one") {
    Engine normalized;
    Options raw_opts;
    raw_opts.normalize_degree = false;
    Engine raw(raw_opts);
    for (long long d : {1, 3, 5}) {
        const BettiResult a = normalized.moduli_betti(2, d, {3, 1});
        const BettiResult b = raw.moduli_betti(2, d, {3, 1});
        CHECK_MESSAGE(a.polynomial == b.polynomial, "d=", d);
    }
    CHECK(normalized.normalized_degree(2, -3, 1) == 1);
    CHECK(normalized.normalized_degree(3, 4, 0) == 4);
    CHECK(normalized.normalized_degree(3, 7, 0) == 1);
    CHECK(raw.normalized_degree(2, -3, 1) == -3);
}

TEST_CASE("a = 0 moduli require the explicit opt-in") {
    Engine eng;
    CHECK_THROWS_WITH_AS(eng.moduli_betti(3, 4, {2, 0}), doctest::Contains("InvalidInput"),
                         Error);

    Options opts;
    opts.allow_a0 = true;
    Engine open(opts);
    const BettiResult res = open.moduli_betti(3, 4, {2, 0});
    // frozen: degree and palindromy are the structural invariants here
    CHECK(res.polynomial.coeffs == ints({1, 2, 2, 5, 9, 10, 9, 5, 2, 2, 1}));
    CHECK(res.polynomial.degree() == 10);
    CHECK(is_palindromic(res.polynomial));
}

TEST_CASE("result metadata") {
    Engine eng;
    const BettiResult res = eng.moduli_betti(2, 1, {2, 3}, 15);
    CHECK(res.genus == 2);
    CHECK(res.circles == 3);
    CHECK(res.rank == 2);
    CHECK(res.degree == 1);
    CHECK(res.order == 15);
    // unstable types within codimension 15: one per codim 2, 4, ..., 14
    CHECK(res.strata_count == 7);
    CHECK(res.cache_key == "g2a3r2d1N15v1");
    CHECK(Engine::default_order(2, 2) == 15);
}

TEST_CASE("quaternionic reduction feeds the engine") {
    // rank 3 forces a = 0; genus 2 makes the twist d' = 1, so (3, 1) -> (3, 4)
    const auto [r, d] = curves::quaternionic_to_real(3, 1, {2, 0});
    CHECK(r == 3);
    CHECK(d == 4);

    Options opts;
    opts.allow_a0 = true;
    Engine eng(opts);
    const BettiResult res = eng.moduli_betti(r, d, {2, 0});
    CHECK(res.polynomial.coeffs == ints({1, 2, 2, 5, 9, 10, 9, 5, 2, 2, 1}));
}
