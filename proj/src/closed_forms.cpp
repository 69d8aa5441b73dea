#include "realbetti/closed_forms.hpp"

#include <array>
#include <utility>

namespace realbetti::closed_forms {

using series::Factor;
using series::FactorProduct;
using series::series_add;
using series::series_div;
using series::series_from_factors;
using series::series_mul;
using series::series_scale;
using series::series_shift;
using series::series_shift_down;
using series::series_sub;

namespace {

constexpr std::array<std::pair<FormulaTag, std::string_view>, 12> kTagNames{{
    {FormulaTag::GaugeReal, "GaugeReal"},
    {FormulaTag::LoopGroupFixed, "LoopGroupFixed"},
    {FormulaTag::LoopGroupAntipodal, "LoopGroupAntipodal"},
    {FormulaTag::ClassicalO, "ClassicalO"},
    {FormulaTag::ClassicalU, "ClassicalU"},
    {FormulaTag::ClassicalSp, "ClassicalSp"},
    {FormulaTag::Rank1Moduli, "Rank1Moduli"},
    {FormulaTag::Rank2Moduli, "Rank2Moduli"},
    {FormulaTag::Rank3Moduli, "Rank3Moduli"},
    {FormulaTag::GenusZeroStableRealA, "GenusZeroStableRealA"},
    {FormulaTag::GenusZeroStableRealB, "GenusZeroStableRealB"},
    {FormulaTag::GenusZeroStableComplex, "GenusZeroStableComplex"},
}};

Int pow2(long long e) {
    Int out = 1;
    return out << e;
}

}  // namespace

std::string_view formula_tag_name(FormulaTag tag) {
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) return name;
    }
    return "?";
}

std::optional<FormulaTag> parse_formula_tag(std::string_view name) {
    for (const auto& [t, n] : kTagNames) {
        if (n == name) return t;
    }
    return std::nullopt;
}

TruncatedSeries gauge_classifying_series(const RealCurveTopology& topo, int rank, int order) {
    curves::validate_topology(topo.genus, topo.real_circles);
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    const int g = topo.genus, a = topo.real_circles;
    FactorProduct fp;
    fp.factors.push_back({-1, 2 * rank, 1});
    fp.factors.push_back({+1, rank, -static_cast<long long>(a)});
    for (int k = 1; k <= rank; ++k) {
        fp.factors.push_back({+1, k, 2LL * a});
        fp.factors.push_back({+1, 2 * k - 1, static_cast<long long>(g) + 1 - a});
        fp.factors.push_back({-1, 2 * k, -2});
    }
    return series_from_factors(fp, order);
}

TruncatedSeries loop_group_series(int rank, LoopKind kind, int order) {
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    FactorProduct fp;
    if (kind == LoopKind::Fixed) {
        fp.factors.push_back({+1, rank, -1});
        for (int k = 1; k <= rank; ++k) {
            fp.factors.push_back({+1, k, 2});
            fp.factors.push_back({-1, 2 * k, -1});
        }
    } else {
        for (int k = 1; k <= rank; ++k) {
            fp.factors.push_back({+1, 2 * k - 1, 1});
            fp.factors.push_back({-1, 2 * k, -1});
        }
    }
    return series_from_factors(fp, order);
}

TruncatedSeries classical_group_series(ClassicalFamily family, std::optional<int> n, int order) {
    if (n && *n < 0) fail(ErrorCode::InvalidInput, "n must be >= 0");
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    const int step = family == ClassicalFamily::O ? 1 : family == ClassicalFamily::U ? 2 : 4;
    // Factors with step*k > order contribute nothing, which is what makes the
    // stable n = infinity series expandable.
    const long long limit = n ? *n : order;
    FactorProduct fp;
    for (long long k = 1; k <= limit && step * k <= order; ++k) {
        fp.factors.push_back({-1, static_cast<int>(step * k), -1});
    }
    return series_from_factors(fp, order);
}

TruncatedSeries low_rank_moduli_closed_form(int rank, const RealCurveTopology& topo, int order) {
    curves::validate_topology(topo.genus, topo.real_circles);
    if (topo.real_circles < 1)
        fail(ErrorCode::InvalidTopology, "closed forms require a >= 1 real circles");
    const int g = topo.genus;
    const long long b = topo.real_circles - 1;

    switch (rank) {
        case 1:
            return series_from_factors({{{+1, 1, g}}, 0}, order);
        case 2: {
            // [(1+t)^{g+b} (1+t^2)^b (1+t^3)^{g-b} - 2^b t^g (1+t)^{2g}] / [(1-t)(1-t^2)]
            TruncatedSeries num = series_sub(
                series_from_factors({{{+1, 1, g + b}, {+1, 2, b}, {+1, 3, g - b}}, 0}, order),
                series_scale(series_from_factors({{{+1, 1, 2LL * g}}, g}, order), pow2(b)));
            return series_div(num, series_from_factors({{{-1, 1, 1}, {-1, 2, 1}}, 0}, order));
        }
        case 3: {
            // Three-term sum; the second and third terms carry a bare t in the
            // denominator, divided out by a checked shift (never truncated away).
            TruncatedSeries t1 = series_from_factors(
                {{{+1, 1, g + b}, {+1, 2, 2 * b}, {+1, 3, g}, {+1, 5, g - b},
                  {-1, 1, -1}, {-1, 2, -2}, {-1, 3, -1}},
                 0},
                order);
            TruncatedSeries t2 = series_shift_down(
                series_from_factors({{{+1, 1, 2LL * g + b}, {+1, 2, b}, {+1, 3, g - b},
                                      {-1, 1, -3}, {-1, 3, -1}},
                                     2LL * g},
                                    order + 1),
                1);
            // (1+t^2+t^4) is encoded as (1-t^6)/(1-t^2); factors must have unit
            // constant term.
            TruncatedSeries t3 = series_shift_down(
                series_from_factors({{{+1, 1, 3LL * g}, {-1, 6, 1}, {-1, 2, -1},
                                      {-1, 1, -2}, {-1, 2, -1}, {-1, 6, -1}},
                                     3LL * g},
                                    order + 1),
                1);
            return series_add(series_sub(t1, series_scale(t2, pow2(b))),
                              series_scale(t3, pow2(2 * b)));
        }
        default:
            fail(ErrorCode::UnsupportedRank,
                 "no printed closed form for rank " + std::to_string(rank));
    }
}

TruncatedSeries genus_zero_stable_series(FormulaTag tag, int order) {
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    FactorProduct fp;
    switch (tag) {
        case FormulaTag::GenusZeroStableRealA:  // prod 1/(1-t^k)^2
            for (int k = 1; k <= order; ++k) fp.factors.push_back({-1, k, -2});
            break;
        case FormulaTag::GenusZeroStableRealB:  // prod (1+t^{2k-1})/(1-t^{2k})^2
            for (int k = 1; 2 * k - 1 <= order; ++k) fp.factors.push_back({+1, 2 * k - 1, 1});
            for (int k = 1; 2 * k <= order; ++k) fp.factors.push_back({-1, 2 * k, -2});
            break;
        case FormulaTag::GenusZeroStableComplex:  // prod 1/(1-t^{2k})^2
            for (int k = 1; 2 * k <= order; ++k) fp.factors.push_back({-1, 2 * k, -2});
            break;
        default:
            fail(ErrorCode::InvalidInput, "not a genus-zero stable series tag");
    }
    return series_from_factors(fp, order);
}

}  // namespace realbetti::closed_forms
