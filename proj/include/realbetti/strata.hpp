#pragma once

#include <vector>

#include "realbetti/series.hpp"

namespace realbetti::strata {

struct HNPart {
    int rank = 1;
    long long degree = 0;

    auto operator<=>(const HNPart&) const = default;
};

// Ordered parts with strictly decreasing slopes d_i/r_i summing to (r, d).
struct ComplexHNType {
    std::vector<HNPart> parts;

    auto operator<=>(const ComplexHNType&) const = default;
};

// A real refinement: one Stiefel-Whitney vector per part, each satisfying the
// per-part parity d_i == sum(w_i) mod 2, with fixed componentwise total mod 2.
struct RealHNType {
    std::vector<HNPart> parts;
    std::vector<std::vector<int>> w;
};

// d_lambda = sum_{i<j} (d_i r_j - d_j r_i + r_i r_j (g-1)). Strictly positive
// for n >= 2 parts and g >= 1. SlopeOrderViolation if slopes not strictly
// decreasing.
long long codimension(const ComplexHNType& hn, int g);

// Same quantity via r_i r_j (mu_i - mu_j) + r_i r_j (g-1) with exact rational
// slope differences; used to cross-check the degree form.
long long codimension_slope_form(const ComplexHNType& hn, int g);

struct Stratum {
    ComplexHNType type;
    long long codim = 0;
};

// Every HN type with n >= 2 parts and codimension <= max_codim, sorted by
// (codim, lexicographic parts). Complete by construction: degree bounds come
// from the codimension budget, and partial codimension only grows. When
// even_parts_only (the a = 0 case), all part degrees are even.
std::vector<Stratum> enumerate_unstable_types(int r, long long d, int g, long long max_codim,
                                              bool even_parts_only);

// Number of real refinements of an n-part complex type: 2^{(a-1)(n-1)} for
// a >= 1; for a = 0, one refinement if all part degrees are even, else none.
Int real_refinement_count(const ComplexHNType& hn, int a);

// Exhaustive refinement enumeration for a fixed total w; intended for small
// a*n (cross-checks real_refinement_count).
std::vector<RealHNType> enumerate_real_refinements(const ComplexHNType& hn, int a,
                                                   const std::vector<int>& total_w);

}  // namespace realbetti::strata
