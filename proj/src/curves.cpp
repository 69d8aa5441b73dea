#include "realbetti/curves.hpp"

#include <numeric>
#include <string>

namespace realbetti::curves {

namespace {

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

}  // namespace

RealCurveTopology validate_topology(int genus, int real_circles) {
    if (genus < 0 || real_circles < 0 || real_circles > genus + 1)
        fail(ErrorCode::InvalidTopology,
             "(g=" + std::to_string(genus) + ", a=" + std::to_string(real_circles) +
                 ") violates 0 <= a <= g+1");
    return RealCurveTopology{genus, real_circles};
}

std::vector<RealBundleType> enumerate_real_types(int rank, long long degree, int a) {
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    if (a < 0) fail(ErrorCode::InvalidInput, "circle count must be >= 0");
    std::vector<RealBundleType> out;
    const long long want = mod2(degree);
    for (unsigned long long mask = 0; mask < (1ull << a); ++mask) {
        if (mod2(static_cast<long long>(__builtin_popcountll(mask))) != want) continue;
        RealBundleType type{rank, degree, std::vector<int>(a)};
        for (int i = 0; i < a; ++i) type.w[i] = (mask >> i) & 1;
        out.push_back(std::move(type));
    }
    return out;
}

bool quaternionic_admissible(int rank, long long degree, const RealCurveTopology& topo) {
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    if (mod2(degree) != mod2(static_cast<long long>(rank) * (topo.genus - 1))) return false;
    if (rank % 2 == 1 && topo.real_circles != 0) return false;
    return true;
}

std::pair<int, long long> quaternionic_to_real(int rank, long long degree,
                                               const RealCurveTopology& topo) {
    if (!quaternionic_admissible(rank, degree, topo))
        fail(ErrorCode::NotAdmissible,
             "no quaternionic bundle of rank " + std::to_string(rank) + ", degree " +
                 std::to_string(degree) + " on (g=" + std::to_string(topo.genus) +
                 ", a=" + std::to_string(topo.real_circles) + ")");
    if (std::gcd(static_cast<long long>(rank), degree) != 1)
        fail(ErrorCode::NotCoprime, "gcd(r, d) must be 1 for the reduction");
    const long long d_prime = mod2(topo.genus - 1);  // smallest nonnegative with d' == g-1 mod 2
    return {rank, degree + static_cast<long long>(rank) * d_prime};
}

}  // namespace realbetti::curves
