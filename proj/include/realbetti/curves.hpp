#pragma once

#include <utility>
#include <vector>

#include "realbetti/errors.hpp"

namespace realbetti::curves {

// (g, a): genus and number of real circles. 0 <= a <= g+1 (Harnack).
struct RealCurveTopology {
    int genus = 0;
    int real_circles = 0;

    bool operator==(const RealCurveTopology&) const = default;
};

RealCurveTopology validate_topology(int genus, int real_circles);

// Topological type of a real bundle: the parity constraint d == sum(w) mod 2
// ties the degree to the Stiefel-Whitney numbers on the a circles.
struct RealBundleType {
    int rank = 1;
    long long degree = 0;
    std::vector<int> w;  // entries in {0,1}, length a

    bool operator==(const RealBundleType&) const = default;
};

struct QuaternionicBundleType {
    int rank = 1;
    long long degree = 0;
};

// All w in {0,1}^a with sum(w) == d mod 2. Count is 2^{a-1} for a >= 1; for
// a == 0, one (empty-w) type if d is even, none if d is odd.
std::vector<RealBundleType> enumerate_real_types(int rank, long long degree, int a);

// d == r(g-1) mod 2, and a == 0 when r is odd.
bool quaternionic_admissible(int rank, long long degree, const RealCurveTopology& topo);

// Tensoring by a degree-d' quaternionic line bundle turns the quaternionic
// problem into a real one with the same rank and degree d + r*d'; d' is the
// smallest nonnegative integer with d' == g-1 mod 2.
std::pair<int, long long> quaternionic_to_real(int rank, long long degree,
                                               const RealCurveTopology& topo);

}  // namespace realbetti::curves
