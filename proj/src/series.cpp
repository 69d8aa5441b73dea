#include "realbetti/series.hpp"

#include <algorithm>

namespace realbetti::series {

namespace {

// (1 + sign*t^k)^e to the given order. e >= 0 is the binomial theorem; e < 0
// expands via C(-e+j-1, j) * (-sign)^j * t^{kj} (negative binomial series).
TruncatedSeries factor_power(const Factor& f, int order) {
    if (f.exponent < 1) fail(ErrorCode::InvalidInput, "factor exponent k must be >= 1");
    if (f.sign != 1 && f.sign != -1) fail(ErrorCode::InvalidInput, "factor sign must be +-1");
    TruncatedSeries out(order);
    if (f.power >= 0) {
        Int binom = 1;  // C(e, j), updated incrementally
        for (long long j = 0; j <= f.power && f.exponent * j <= order; ++j) {
            out.coeffs[f.exponent * j] = (f.sign < 0 && (j & 1)) ? -binom : binom;
            binom = binom * (f.power - j) / (j + 1);
        }
    } else {
        const long long m = -f.power;
        Int binom = 1;  // C(m+j-1, j)
        for (long long j = 0; f.exponent * j <= order; ++j) {
            out.coeffs[f.exponent * j] = (f.sign > 0 && (j & 1)) ? -binom : binom;
            binom = binom * (m + j) / (j + 1);
        }
    }
    return out;
}

}  // namespace

TruncatedSeries series_from_factors(const FactorProduct& fp, int order) {
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    if (fp.monomial < 0) fail(ErrorCode::InvalidInput, "monomial shift must be >= 0");
    TruncatedSeries out = TruncatedSeries::constant(1, order);
    for (const Factor& f : fp.factors) out = series_mul(out, factor_power(f, order));
    if (fp.monomial > 0) out = series_shift(out, static_cast<int>(std::min<long long>(fp.monomial, order + 1)));
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (int i = 0; i <= out.order; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (int i = 0; i <= out.order; ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (int i = 0; i <= out.order; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= out.order; ++j) {
            if (b.coeffs[j] != 0) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Int& c) {
    TruncatedSeries out(a.order);
    for (int i = 0; i <= out.order; ++i) out.coeffs[i] = a.coeffs[i] * c;
    return out;
}

TruncatedSeries series_shift(const TruncatedSeries& a, int m) {
    if (m < 0) fail(ErrorCode::InvalidInput, "shift must be >= 0");
    TruncatedSeries out(a.order);
    for (int i = 0; i + m <= a.order; ++i) out.coeffs[i + m] = a.coeffs[i];
    return out;
}

TruncatedSeries series_shift_down(const TruncatedSeries& a, int m) {
    if (m < 0 || m > a.order) fail(ErrorCode::InvalidInput, "shift-down out of range");
    for (int i = 0; i < m; ++i) {
        if (a.coeffs[i] != 0)
            fail(ErrorCode::DivisorNotUnit,
                 "series not divisible by t^" + std::to_string(m) +
                     " (coefficient " + std::to_string(i) + " nonzero)");
    }
    TruncatedSeries out(a.order - m);
    for (int i = 0; i <= out.order; ++i) out.coeffs[i] = a.coeffs[i + m];
    return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeffs[0] != 1 && b.coeffs[0] != -1)
        fail(ErrorCode::DivisorNotUnit, "divisor constant term is not +-1");
    const int N = std::min(a.order, b.order);
    // Long division against the remainder; b0 = +-1 is its own inverse.
    TruncatedSeries q(N);
    std::vector<Int> rem(a.coeffs.begin(), a.coeffs.begin() + N + 1);
    for (int i = 0; i <= N; ++i) {
        Int qi = rem[i] * b.coeffs[0];
        q.coeffs[i] = qi;
        if (qi != 0) {
            for (int j = i; j <= N; ++j) rem[j] -= qi * b.coeffs[j - i];
        }
    }
    return q;
}

BettiPolynomial extract_polynomial(const TruncatedSeries& s, int expected_degree, int margin) {
    if (expected_degree < 0) fail(ErrorCode::InvalidInput, "expected degree must be >= 0");
    if (s.order < expected_degree + margin)
        fail(ErrorCode::InvalidInput,
             "order " + std::to_string(s.order) + " leaves no safety margin above degree " +
                 std::to_string(expected_degree));
    for (int i = expected_degree + 1; i <= s.order; ++i) {
        if (s.coeffs[i] != 0)
            fail(ErrorCode::TailNotZero,
                 "coefficient of t^" + std::to_string(i) + " is " + s.coeffs[i].str() +
                     ", expected polynomial of degree " + std::to_string(expected_degree));
    }
    int deg = expected_degree;
    while (deg > 0 && s.coeffs[deg] == 0) --deg;
    BettiPolynomial p;
    p.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + deg + 1);
    return p;
}

bool is_palindromic(const BettiPolynomial& p) {
    const int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i) {
        if (p.coeffs[i] != p.coeffs[d - i]) return false;
    }
    return true;
}

}  // namespace realbetti::series
