#include "realbetti/strata.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace realbetti::strata {

namespace {

// Floored quotient; b > 0. Truncating '/' would be wrong for the negative
// numerators that legitimately appear in the degree bounds below.
long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

void check_slopes(const ComplexHNType& hn) {
    for (size_t i = 0; i + 1 < hn.parts.size(); ++i) {
        const auto& p = hn.parts[i];
        const auto& q = hn.parts[i + 1];
        // d_i/r_i > d_{i+1}/r_{i+1}, cross-multiplied (ranks positive)
        if (p.degree * q.rank <= q.degree * p.rank)
            fail(ErrorCode::SlopeOrderViolation,
                 "slopes not strictly decreasing at parts " + std::to_string(i) + "," +
                     std::to_string(i + 1));
    }
}

}  // namespace

long long codimension(const ComplexHNType& hn, int g) {
    check_slopes(hn);
    long long sum = 0;
    const auto& ps = hn.parts;
    for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i + 1; j < ps.size(); ++j) {
            sum += ps[i].degree * ps[j].rank - ps[j].degree * ps[i].rank +
                   static_cast<long long>(ps[i].rank) * ps[j].rank * (g - 1);
        }
    }
    return sum;
}

long long codimension_slope_form(const ComplexHNType& hn, int g) {
    check_slopes(hn);
    // sum_{i<j} r_i r_j (mu_i - mu_j) + r_i r_j (g-1), with the slope
    // difference carried as an exact reduced fraction. r_i r_j clears the
    // denominator; anything else is an internal inconsistency.
    long long sum = 0;
    const auto& ps = hn.parts;
    for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i + 1; j < ps.size(); ++j) {
            const boost::rational<long long> diff =
                boost::rational<long long>(ps[i].degree, ps[i].rank) -
                boost::rational<long long>(ps[j].degree, ps[j].rank);
            const long long rr = static_cast<long long>(ps[i].rank) * ps[j].rank;
            const boost::rational<long long> term = diff * rr;
            if (term.denominator() != 1)
                fail(ErrorCode::InvalidInput, "r_i r_j (mu_i - mu_j) not integral");
            sum += term.numerator() + rr * (g - 1);
        }
    }
    return sum;
}

std::vector<Stratum> enumerate_unstable_types(int r, long long d, int g, long long max_codim,
                                              bool even_parts_only) {
    if (r < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    if (g < 1) fail(ErrorCode::InvalidInput, "genus must be >= 1");
    if (max_codim < 0) fail(ErrorCode::InvalidInput, "max_codim must be >= 0");

    std::vector<Stratum> out;
    std::vector<HNPart> parts;

    // Appending part (rho, delta) in front of remainder (rem_r, rem_d) adds
    // X = delta*rem_r - rho*rem_d + rho*(rem_r - rho)*(g-1) to the codimension
    // (all pairs of the new part with later parts). Each such increment is
    // >= 1 for g >= 1, so pruning on the running total is safe.
    auto rec = [&](auto&& self, int rem_r, long long rem_d, long long acc) -> void {
        if (rem_r == 0) {
            if (parts.size() >= 2 && rem_d == 0) out.push_back({ComplexHNType{parts}, acc});
            return;
        }
        for (int rho = 1; rho <= rem_r; ++rho) {
            long long delta_lo, delta_hi;
            if (rho == rem_r) {
                delta_lo = delta_hi = rem_d;  // last part takes the rest
            } else {
                // New part's slope strictly above the remaining average.
                delta_lo = floor_div(rho * rem_d, rem_r) + 1;
                // Budget: X <= max_codim - acc. The bound can be negative.
                const long long num =
                    max_codim - acc + rho * rem_d - static_cast<long long>(rho) * (rem_r - rho) * (g - 1);
                delta_hi = floor_div(num, rem_r);
            }
            for (long long delta = delta_lo; delta <= delta_hi; ++delta) {
                if (even_parts_only && ((delta % 2) + 2) % 2 != 0) continue;
                if (!parts.empty()) {
                    const auto& prev = parts.back();
                    if (delta * prev.rank >= prev.degree * rho) continue;  // slopes must decrease
                }
                const long long X =
                    rho == rem_r
                        ? 0
                        : delta * rem_r - rho * rem_d + static_cast<long long>(rho) * (rem_r - rho) * (g - 1);
                if (acc + X > max_codim) continue;
                parts.push_back({rho, delta});
                self(self, rem_r - rho, rem_d - delta, acc + X);
                parts.pop_back();
            }
        }
    };
    rec(rec, r, d, 0);

    std::sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.type < y.type;
    });
    return out;
}

Int real_refinement_count(const ComplexHNType& hn, int a) {
    if (a < 0) fail(ErrorCode::InvalidInput, "circle count must be >= 0");
    if (hn.parts.empty()) fail(ErrorCode::InvalidInput, "empty HN type");
    if (a == 0) {
        for (const auto& p : hn.parts) {
            if (((p.degree % 2) + 2) % 2 != 0) return 0;
        }
        return 1;
    }
    Int one = 1;
    return one << (static_cast<long long>(a - 1) * (static_cast<long long>(hn.parts.size()) - 1));
}

std::vector<RealHNType> enumerate_real_refinements(const ComplexHNType& hn, int a,
                                                   const std::vector<int>& total_w) {
    const size_t n = hn.parts.size();
    if (static_cast<int>(total_w.size()) != a)
        fail(ErrorCode::InvalidInput, "total w must have length a");
    if (a * n > 24) fail(ErrorCode::InvalidInput, "refinement enumeration is exhaustive; a*n too large");

    std::vector<RealHNType> out;
    const unsigned long long total = 1ull << (a * n);
    for (unsigned long long mask = 0; mask < total; ++mask) {
        std::vector<std::vector<int>> w(n, std::vector<int>(a));
        bool ok = true;
        std::vector<int> colsum(a, 0);
        for (size_t i = 0; i < n && ok; ++i) {
            int rowsum = 0;
            for (int c = 0; c < a; ++c) {
                const int bit = (mask >> (i * a + c)) & 1;
                w[i][c] = bit;
                rowsum += bit;
                colsum[c] += bit;
            }
            if ((rowsum - hn.parts[i].degree) % 2 != 0) ok = false;
        }
        for (int c = 0; c < a && ok; ++c) {
            if ((colsum[c] - total_w[c]) % 2 != 0) ok = false;
        }
        if (ok) out.push_back({hn.parts, std::move(w)});
    }
    return out;
}

}  // namespace realbetti::strata
