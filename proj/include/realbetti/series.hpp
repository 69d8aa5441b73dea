#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "realbetti/errors.hpp"

namespace realbetti {

using Int = boost::multiprecision::cpp_int;

namespace series {

// Power series in t, exact up to and including t^order. coeffs.size() == order+1,
// always. Immutable by convention: every operation returns a fresh value.
struct TruncatedSeries {
    int order = 0;
    std::vector<Int> coeffs;  // coeffs[i] is the coefficient of t^i

    TruncatedSeries() : coeffs(1) {}
    explicit TruncatedSeries(int order_) : order(order_), coeffs(order_ + 1) {}

    static TruncatedSeries constant(const Int& c, int order) {
        TruncatedSeries s(order);
        s.coeffs[0] = c;
        return s;
    }

    const Int& operator[](int i) const { return coeffs[i]; }

    bool operator==(const TruncatedSeries&) const = default;
};

// One factor (1 + sign*t^k)^power; constant term is 1 for every k >= 1, so any
// integer power (negative included) expands to a well-defined integer series.
struct Factor {
    int sign;        // +1 or -1
    int exponent;    // k >= 1
    long long power; // e, may be negative
};

// monomial * product of factors; monomial >= 0.
struct FactorProduct {
    std::vector<Factor> factors;
    long long monomial = 0;
};

TruncatedSeries series_from_factors(const FactorProduct& fp, int order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Int& c);

// Multiply by t^m (coefficients beyond the order fall off the end).
TruncatedSeries series_shift(const TruncatedSeries& a, int m);

// Exact division by t^m: requires coeffs[0..m-1] == 0, errors DivisorNotUnit
// otherwise. Result has order a.order - m.
TruncatedSeries series_shift_down(const TruncatedSeries& a, int m);

// Exact quotient to the common order; b must have constant term +-1
// (DivisorNotUnit otherwise). Postcondition: a == q*b to that order.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

struct BettiPolynomial {
    std::vector<Int> coeffs;  // leading coefficient nonzero (degenerate {0} never produced here)

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const BettiPolynomial&) const = default;
};

// Certifies that s is a polynomial of degree <= expected_degree: every
// coefficient in (expected_degree, order] must vanish (TailNotZero otherwise),
// and the order must leave at least `margin` coefficients to check
// (InvalidInput otherwise). Returns the polynomial with its actual degree.
BettiPolynomial extract_polynomial(const TruncatedSeries& s, int expected_degree,
                                   int margin = 10);

bool is_palindromic(const BettiPolynomial& p);

}  // namespace series
}  // namespace realbetti
