#include <doctest.h>

#include "quillen/errors.hpp"
#include "quillen/formulas.hpp"

using namespace quillen;
using namespace quillen::formulas;

TEST_CASE("epsilon follows q mod 4") {
    CHECK(epsilon(5) == 1);
    CHECK(epsilon(9) == 1);
    CHECK(epsilon(13) == 1);
    CHECK(epsilon(7) == -1);
    CHECK(epsilon(11) == -1);
    CHECK_THROWS_AS(epsilon(8), ConfigError);
}

TEST_CASE("involution and four-subgroup counts") {
    CHECK(psl2_counts(5).involutions == 15);
    CHECK(psl2_counts(5).four_subgroups == 5);
    CHECK(pgl2_counts(5).involutions == 25);
    CHECK(pgl2_counts(5).four_subgroups == 20);
    CHECK(psl2_counts(9).involutions == 45);
    CHECK(psl2_counts(9).four_subgroups == 30);
    CHECK(pgl2_counts(9).involutions == 81);
    CHECK(pgl2_counts(9).four_subgroups == 120);
    CHECK(psl2_counts(7).involutions == 21);
    CHECK(psl2_counts(7).four_subgroups == 14);
    CHECK_THROWS_AS(psl2_counts(8), ConfigError);
    CHECK_THROWS_AS(psl2_counts(15), ConfigError);
}

TEST_CASE("negative Euler characteristic polynomials") {
    CHECK(neg_euler_pgl2(9) == 160);
    CHECK(neg_euler_psl2(9) == 16);
    CHECK(neg_euler_psl2(5) == -4); // disconnected case: -chi~, not a dimension
    CHECK(neg_euler_pgl2(5) == 16);
    CHECK(neg_euler_psl2(7) == 8);
}

TEST_CASE("dimension-3 linear and unitary Euler values") {
    CHECK(f3(3) == 66);
    CHECK(euler_psl3(3) == 352);
    CHECK(euler_psu3(3) == 64);
    CHECK(euler_psl3(1) == 0);
}

TEST_CASE("outer involution counts") {
    CHECK(outer_involution_count(Family::PSL2, 9, OuterType::Field) == 30);
    CHECK(outer_involution_count(Family::PSU3, 3, OuterType::Graph) == 252);
    CHECK(outer_involution_count(Family::PSL3, 3, OuterType::Graph) == 234);
    CHECK(outer_involution_count(Family::PSL3, 9, OuterType::Field) == 7560);
    CHECK_THROWS_AS(outer_involution_count(Family::PSL2, 9, OuterType::Graph), ConfigError);
    CHECK_THROWS_AS(outer_involution_count(Family::PSL2, 7, OuterType::Field), ConfigError);
    CHECK_THROWS_AS(outer_involution_count(Family::PSU3, 3, OuterType::Field), ConfigError);
}

TEST_CASE("Ree Euler characteristic: both routes agree and stay positive") {
    CHECK(ree_euler(3) == 8);
    CHECK(ree_euler_from_normalizers(3) == 8);
    // twenty consecutive odd prime powers
    int checked = 0;
    for (std::uint32_t q = 3; checked < 20; q += 2) {
        if (!is_odd_prime_power(q)) continue;
        CHECK(ree_euler(q) == ree_euler_from_normalizers(q));
        ++checked;
    }
    for (std::uint32_t q = 5; q <= 19683; q += 2) {
        if (!is_odd_prime_power(q)) continue;
        BigInt quintic = bpow(BigInt(q), 5) - 8 * bpow(BigInt(q), 4) + 15 * bpow(BigInt(q), 3) + 21;
        CHECK(quintic > 0);
    }
}

TEST_CASE("extension bounds") {
    CHECK(extension_bound(30, 0, 16) == -16); // trivial bound, consistent with failure
    CHECK(extension_bound(252, 0, 64) == -64);
    CHECK(psl2_field_extension_bound(25) == 1104);
    CHECK_THROWS_AS(psl2_field_extension_bound(24), ConfigError);
    CHECK(psu3_extension_bound(3) == -64);
    CHECK(psu3_extension_bound(5) > 0);
    for (std::uint32_t q = 7; q <= 81; q += 2)
        if (is_odd_prime_power(q)) CHECK(psu3_extension_bound(q) > 0);
}

TEST_CASE("prime power recognition") {
    CHECK(is_odd_prime_power(27));
    CHECK(is_odd_prime_power(19683));
    CHECK_FALSE(is_odd_prime_power(15));
    CHECK_FALSE(is_odd_prime_power(1));
    CHECK_FALSE(is_odd_prime_power(8));
    CHECK(is_prime_power(8));
}
