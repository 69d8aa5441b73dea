#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "realbetti/curves.hpp"
#include "realbetti/series.hpp"

namespace realbetti::recursion {

// Memo key. d is stored as its canonical residue (mod r for a >= 1, mod 2r for
// a = 0 — tensoring by a real line bundle identifies the strata pictures), so
// sub-calls across strata share entries.
struct RecursionKey {
    int genus = 0;
    int circles = 0;
    int rank = 0;
    long long degree = 0;
    int order = 0;

    auto operator<=>(const RecursionKey&) const = default;
};

struct Options {
    bool normalize_degree = true;  // raw-d mode exists for auditing the normalization
    bool allow_a0 = false;         // the a = 0 recursion path is explicitly opted into
    std::optional<std::filesystem::path> cache_dir;  // nullopt: in-memory memo only
};

struct BettiResult {
    series::BettiPolynomial polynomial;
    int genus = 0;
    int circles = 0;
    int rank = 0;
    long long degree = 0;     // as requested (not normalized)
    int order = 0;            // truncation order used
    long long strata_count = 0;  // unstable types summed at top level
    std::string cache_key;
};

class Engine {
  public:
    explicit Engine(Options opts = {});

    // P_ss(r,d) = gauge series - sum over unstable HN types of
    // (refinement count) * t^codim * prod_i P_ss(r_i, d_i). Memoized.
    series::TruncatedSeries semistable_series(int rank, long long degree,
                                              const curves::RealCurveTopology& topo, int order);

    // (1-t) * P_ss, certified to be a polynomial of degree r^2(g-1)+1.
    // order_override only raises the default degree+10.
    BettiResult moduli_betti(int rank, long long degree, const curves::RealCurveTopology& topo,
                             std::optional<int> order_override = std::nullopt);

    static int default_order(int rank, int genus) {
        return rank * rank * (genus - 1) + 1 + 10;
    }

    long long normalized_degree(int rank, long long degree, int circles) const;

  private:
    Options opts_;
    std::mutex mutex_;  // memo: concurrent readers would race with inserts; guard all access
    std::map<RecursionKey, series::TruncatedSeries> memo_;
};

}  // namespace realbetti::recursion
