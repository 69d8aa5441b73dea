#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "realbetti/curves.hpp"
#include "realbetti/series.hpp"

namespace realbetti::closed_forms {

using curves::RealCurveTopology;
using series::TruncatedSeries;

enum class FormulaTag {
    GaugeReal,
    LoopGroupFixed,
    LoopGroupAntipodal,
    ClassicalO,
    ClassicalU,
    ClassicalSp,
    Rank1Moduli,
    Rank2Moduli,
    Rank3Moduli,
    GenusZeroStableRealA,
    GenusZeroStableRealB,
    GenusZeroStableComplex,
};

std::string_view formula_tag_name(FormulaTag tag);
std::optional<FormulaTag> parse_formula_tag(std::string_view name);

enum class LoopKind { Fixed, Antipodal };
enum class ClassicalFamily { O, U, Sp };

// (1-t^{2r})/(1+t^r)^a * prod_{k=1}^{r} (1+t^k)^{2a} (1+t^{2k-1})^{g+1-a} / (1-t^{2k})^2.
// Independent of degree and Stiefel-Whitney data; collapses to (1+t)^g/(1-t) at r=1.
TruncatedSeries gauge_classifying_series(const RealCurveTopology& topo, int rank, int order);

// Fixed-circle: 1/(1+t^r) * prod (1+t^k)^2/(1-t^{2k}); antipodal: prod (1+t^{2k-1})/(1-t^{2k}).
TruncatedSeries loop_group_series(int rank, LoopKind kind, int order);

// O: prod_{k<=n} 1/(1-t^k); U: 1/(1-t^{2k}); Sp: 1/(1-t^{4k}). n == nullopt means
// the stable (n = infinity) series, expanded order-limited.
TruncatedSeries classical_group_series(ClassicalFamily family, std::optional<int> n, int order);

// The printed rank-1/2/3 moduli polynomials as series (a >= 1 required; their
// internal bare-t division is checked, not assumed).
TruncatedSeries low_rank_moduli_closed_form(int rank, const RealCurveTopology& topo, int order);

// Stable genus-zero gauge series: real kind a (a=1 fixed-circle involution),
// real kind b (antipodal), and the complex base.
TruncatedSeries genus_zero_stable_series(FormulaTag tag, int order);

}  // namespace realbetti::closed_forms
