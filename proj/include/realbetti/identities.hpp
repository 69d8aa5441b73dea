#pragma once

#include <string>

#include "realbetti/series.hpp"

namespace realbetti::identities {

struct IdentityReport {
    std::string id;
    int order = 0;
    bool equal = false;
    int mismatch_index = -1;  // -1 when equal
    Int lhs_at_mismatch;
    Int rhs_at_mismatch;
};

// prod 1/(1-t^{2k})^2 = [prod 1/(1-t^{2k})] * sum_n t^{2n^2} prod_{k<=n} 1/(1-t^{2k})^2.
// perturb shifts one RHS exponent by 1 (negative control: must be detected).
IdentityReport verify_stable_cp1_complex(int order, bool perturb = false);

// prod 1/(1-x^k) = sum_d x^{d^2} / prod_{k<=d} (1-x^k)^2, with the LHS also
// checked against a series-free partition count for n <= min(order, 30).
IdentityReport verify_partition_identity(int order, bool perturb = false);

// kind 'a': prod 1/(1-t^k)^2      = P(BO) * sum_n t^{n^2}  P(BO_n)^2
// kind 'b': prod (1+t^{2k-1})/(1-t^{2k})^2 = P(BO) * sum_n t^{4n^2} P(BSp_n)^2
IdentityReport verify_genus_zero_real(char kind, int order, bool perturb = false);

// Recursive enumeration, no series involved; the independent oracle for p(n).
unsigned long long brute_force_partition_count(int n);

}  // namespace realbetti::identities
