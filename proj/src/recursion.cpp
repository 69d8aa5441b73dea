#include "realbetti/recursion.hpp"

#include <algorithm>
#include <numeric>

#include "realbetti/cache.hpp"
#include "realbetti/closed_forms.hpp"
#include "realbetti/strata.hpp"

namespace realbetti::recursion {

using series::TruncatedSeries;

namespace {

long long floor_mod(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

Engine::Engine(Options opts) : opts_(std::move(opts)) {}

long long Engine::normalized_degree(int rank, long long degree, int circles) const {
    if (!opts_.normalize_degree) return degree;
    return floor_mod(degree, circles >= 1 ? rank : 2LL * rank);
}

TruncatedSeries Engine::semistable_series(int rank, long long degree,
                                          const curves::RealCurveTopology& topo, int order) {
    curves::validate_topology(topo.genus, topo.real_circles);
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    if (order < 0) fail(ErrorCode::InvalidInput, "order must be >= 0");
    if (topo.genus < 1)
        fail(ErrorCode::InvalidInput, "the recursion needs g >= 1 (codimension positivity)");
    if (topo.real_circles == 0 && floor_mod(degree, 2) != 0)
        fail(ErrorCode::InvalidInput, "a = 0 forces even degree");

    const int g = topo.genus, a = topo.real_circles;
    const long long d = normalized_degree(rank, degree, a);
    const RecursionKey key{g, a, rank, d, order};

    {
        std::scoped_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const std::string disk_key = cache::cache_key(g, a, rank, d, order);
    if (opts_.cache_dir) {
        if (auto cached = cache::load(*opts_.cache_dir, disk_key)) {
            std::scoped_lock lock(mutex_);
            return memo_.try_emplace(key, std::move(*cached)).first->second;
        }
    }

    // Strata with codimension above the order shift past it entirely, so the
    // order doubles as the enumeration bound.
    TruncatedSeries total = closed_forms::gauge_classifying_series(topo, rank, order);
    for (const auto& stratum : strata::enumerate_unstable_types(rank, d, g, order, a == 0)) {
        const Int weight = strata::real_refinement_count(stratum.type, a);
        if (weight == 0) continue;
        TruncatedSeries prod = TruncatedSeries::constant(1, order);
        for (const auto& part : stratum.type.parts) {
            prod = series_mul(prod, semistable_series(part.rank, part.degree, topo, order));
        }
        total = series_sub(
            total, series_scale(series_shift(prod, static_cast<int>(stratum.codim)), weight));
    }

    if (opts_.cache_dir) cache::store(*opts_.cache_dir, disk_key, total);
    std::scoped_lock lock(mutex_);
    // First insert wins; a concurrent duplicate computation produced the same value.
    return memo_.try_emplace(key, std::move(total)).first->second;
}

BettiResult Engine::moduli_betti(int rank, long long degree, const curves::RealCurveTopology& topo,
                                 std::optional<int> order_override) {
    curves::validate_topology(topo.genus, topo.real_circles);
    if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    if (topo.genus < 2)
        fail(ErrorCode::InvalidInput, "moduli extraction needs g >= 2");
    if (std::gcd(static_cast<long long>(rank), degree) != 1)
        fail(ErrorCode::NotCoprime,
             "gcd(" + std::to_string(rank) + ", " + std::to_string(degree) + ") != 1");
    if (topo.real_circles == 0 && !opts_.allow_a0)
        fail(ErrorCode::InvalidInput, "the a = 0 path must be enabled explicitly (allow_a0)");

    const int expected_degree = rank * rank * (topo.genus - 1) + 1;
    int order = expected_degree + 10;
    if (order_override) order = std::max(order, *order_override);

    const TruncatedSeries ss = semistable_series(rank, degree, topo, order);
    // (1-t) corrects for the trivial scalar action on the semistable stack.
    const TruncatedSeries corrected =
        series_mul(ss, series::series_from_factors({{{-1, 1, 1}}, 0}, order));

    BettiResult result;
    result.polynomial = series::extract_polynomial(corrected, expected_degree);
    result.genus = topo.genus;
    result.circles = topo.real_circles;
    result.rank = rank;
    result.degree = degree;
    result.order = order;
    const long long dn = normalized_degree(rank, degree, topo.real_circles);
    result.strata_count = static_cast<long long>(
        strata::enumerate_unstable_types(rank, dn, topo.genus, order, topo.real_circles == 0)
            .size());
    result.cache_key = cache::cache_key(topo.genus, topo.real_circles, rank, dn, order);
    return result;
}

}  // namespace realbetti::recursion
