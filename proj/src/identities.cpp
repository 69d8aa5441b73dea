#include "realbetti/identities.hpp"

#include <algorithm>

#include "realbetti/closed_forms.hpp"

namespace realbetti::identities {

using closed_forms::ClassicalFamily;
using closed_forms::classical_group_series;
using closed_forms::FormulaTag;
using closed_forms::genus_zero_stable_series;
using series::Factor;
using series::FactorProduct;
using series::series_add;
using series::series_mul;
using series::series_shift;
using series::TruncatedSeries;

namespace {

IdentityReport compare(std::string id, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    IdentityReport report;
    report.id = std::move(id);
    report.order = std::min(lhs.order, rhs.order);
    report.equal = true;
    for (int i = 0; i <= report.order; ++i) {
        if (lhs.coeffs[i] != rhs.coeffs[i]) {
            report.equal = false;
            report.mismatch_index = i;
            report.lhs_at_mismatch = lhs.coeffs[i];
            report.rhs_at_mismatch = rhs.coeffs[i];
            break;
        }
    }
    return report;
}

// prod_{k<=n} 1/(1-t^{step*k})^2 to the given order.
TruncatedSeries squared_tail(int step, int n, int order) {
    FactorProduct fp;
    for (int k = 1; k <= n && step * k <= order; ++k) fp.factors.push_back({-1, step * k, -2});
    return series::series_from_factors(fp, order);
}

}  // namespace

IdentityReport verify_stable_cp1_complex(int order, bool perturb) {
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    const TruncatedSeries lhs = genus_zero_stable_series(FormulaTag::GenusZeroStableComplex, order);
    TruncatedSeries sum(order);
    for (int n = 0; 2LL * n * n <= order; ++n) {
        const int shift = 2 * n * n + (perturb && n == 1 ? 1 : 0);
        sum = series_add(sum, series_shift(squared_tail(2, n, order), shift));
    }
    const TruncatedSeries rhs =
        series_mul(classical_group_series(ClassicalFamily::U, std::nullopt, order), sum);
    return compare("stable-cp1-complex", lhs, rhs);
}

IdentityReport verify_partition_identity(int order, bool perturb) {
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    const TruncatedSeries lhs = classical_group_series(ClassicalFamily::O, std::nullopt, order);
    TruncatedSeries rhs(order);
    for (int d = 0; 1LL * d * d <= order; ++d) {
        const int shift = d * d + (perturb && d == 1 ? 1 : 0);
        rhs = series_add(rhs, series_shift(squared_tail(1, d, order), shift));
    }
    IdentityReport report = compare("partition", lhs, rhs);
    if (report.equal) {
        // The series knows nothing the enumerator doesn't: cross-check p(n).
        for (int n = 0; n <= std::min(order, 30); ++n) {
            if (lhs.coeffs[n] != brute_force_partition_count(n)) {
                report.equal = false;
                report.mismatch_index = n;
                report.lhs_at_mismatch = lhs.coeffs[n];
                report.rhs_at_mismatch = brute_force_partition_count(n);
                break;
            }
        }
    }
    return report;
}

IdentityReport verify_genus_zero_real(char kind, int order, bool perturb) {
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    if (kind != 'a' && kind != 'b') fail(ErrorCode::InvalidInput, "kind must be 'a' or 'b'");
    const TruncatedSeries lhs = genus_zero_stable_series(
        kind == 'a' ? FormulaTag::GenusZeroStableRealA : FormulaTag::GenusZeroStableRealB, order);
    const int square_step = kind == 'a' ? 1 : 4;
    const ClassicalFamily family = kind == 'a' ? ClassicalFamily::O : ClassicalFamily::Sp;
    TruncatedSeries sum(order);
    for (int n = 0; 1LL * square_step * n * n <= order; ++n) {
        const TruncatedSeries bn = classical_group_series(family, n, order);
        const int shift = square_step * n * n + (perturb && n == 1 ? 1 : 0);
        sum = series_add(sum, series_shift(series_mul(bn, bn), shift));
    }
    const TruncatedSeries rhs =
        series_mul(classical_group_series(ClassicalFamily::O, std::nullopt, order), sum);
    return compare(std::string("genus-zero-real-") + kind, lhs, rhs);
}

unsigned long long brute_force_partition_count(int n) {
    if (n < 0) return 0;
    // count(n, mx): partitions of n with parts <= mx
    auto count = [](auto&& self, int m, int mx) -> unsigned long long {
        if (m == 0) return 1;
        if (mx == 0) return 0;
        unsigned long long total = 0;
        for (int first = std::min(m, mx); first >= 1; --first) total += self(self, m - first, first);
        return total;
    };
    return count(count, n, n);
}

}  // namespace realbetti::identities
