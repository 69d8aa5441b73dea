#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "realbetti/identities.hpp"

using namespace realbetti;
using namespace realbetti::identities;

TEST_CASE("all four identities hold through order 100") {
    const IdentityReport reports[] = {
        verify_stable_cp1_complex(100),
        verify_partition_identity(100),
        verify_genus_zero_real('a', 100),
        verify_genus_zero_real('b', 100),
    };
    for (const auto& rep : reports) {
        CHECK_MESSAGE(rep.equal, rep.id);
        CHECK(rep.order == 100);
        CHECK(rep.mismatch_index == -1);
    }
}

TEST_CASE("identities hold at degenerate orders") {
    CHECK(verify_stable_cp1_complex(0).equal);
    CHECK(verify_partition_identity(0).equal);
    CHECK(verify_partition_identity(1).equal);
    CHECK(verify_genus_zero_real('a', 1).equal);
    CHECK(verify_genus_zero_real('b', 1).equal);
}

TEST_CASE("perturbed negative controls are detected") {
    const IdentityReport reports[] = {
        verify_stable_cp1_complex(60, true),
        verify_partition_identity(60, true),
        verify_genus_zero_real('a', 60, true),
        verify_genus_zero_real('b', 60, true),
    };
    for (const auto& rep : reports) {
        CHECK_MESSAGE(!rep.equal, rep.id);
        CHECK(rep.mismatch_index >= 0);
        CHECK(rep.mismatch_index <= 60);
        CHECK(rep.lhs_at_mismatch != rep.rhs_at_mismatch);
    }
}

TEST_CASE("partition counts from first principles") {
    const unsigned long long want[] = {1,  1,  2,  3,  5,   7,   11,  15,  22, 30,
                                       42, 56, 77, 101, 135, 176, 231, 297, 385, 490};
    for (int n = 0; n < 20; ++n) CHECK(brute_force_partition_count(n) == want[n]);
    CHECK(brute_force_partition_count(20) == 627);
    CHECK(brute_force_partition_count(30) == 5604);
}

TEST_CASE("identity ids are stable") {
    CHECK(verify_stable_cp1_complex(5).id == "stable-cp1-complex");
    CHECK(verify_partition_identity(5).id == "partition");
    CHECK(verify_genus_zero_real('a', 5).id == "genus-zero-real-a");
    CHECK(verify_genus_zero_real('b', 5).id == "genus-zero-real-b");
    CHECK_THROWS_WITH_AS(verify_genus_zero_real('c', 5), doctest::Contains("InvalidInput"),
                         Error);
}
