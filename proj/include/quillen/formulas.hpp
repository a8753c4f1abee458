#pragma once

#include <cstdint>

#include "quillen/atlas.hpp"
#include "quillen/bigint.hpp"

namespace quillen::formulas {

// eps = +1 if q = 1 mod 4, -1 if q = 3 mod 4. Derived, never passed in.
int epsilon(std::uint32_t q);

bool is_odd_prime_power(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

struct CountPair {
    BigInt involutions;
    BigInt four_subgroups;
};

// q(q+eps)/2 and q(q^2-1)/24 for PSL2; q^2 and q(q^2-1)/6 for PGL2 (q odd >= 5).
CountPair psl2_counts(std::uint32_t q);
CountPair pgl2_counts(std::uint32_t q);

// (1/12)(q-eps)(q^2-(6-eps)q-12eps): equals dim H~_1(A_2(PSL2(q))) when the
// poset is connected (q != 5); at q = 5 it is -chi~, not a dimension.
BigInt neg_euler_psl2(std::uint32_t q);
// (1/3)(q-3)(q^2-1)
BigInt neg_euler_pgl2(std::uint32_t q);

BigInt f3(std::uint32_t q); // q^3 + 3q^2 + 3q + 3

// (1/3)(q-1)(q^2-1) f3(q), returned as dim H~_1 of the connected
// 1-dimensional poset (the -chi~ convention).
BigInt euler_psl3(std::uint32_t q);
// (1/3)(q^6 - 2q^5 - q^4 + 2q^3 - 3q^2 + 3), same convention.
BigInt euler_psu3(std::uint32_t q);

enum class OuterType { Field, Graph, GraphField };

// Outer-involution counts per type from the quotient-of-orders formulas.
BigInt outer_involution_count(Family fam, std::uint32_t q, OuterType t);

// (1/21)(q^2-1)(q^5-8q^4+15q^3+21); checked against the normalizer-order sum.
BigInt ree_euler(std::uint32_t q);
// -1 + |L|/(2|PSL2(q)|) - 2|L|/(6(q+1)) + 8|L|/168 with |L| = q^3(q^3+1)(q-1).
BigInt ree_euler_from_normalizers(std::uint32_t q);

// n1*d_cent - d_base
BigInt extension_bound(const BigInt& n1, const BigInt& d_cent, const BigInt& d_base);

// (1/4)(sqrt(q)-1)(q-1)(q^(3/2)-3q-4) for the field extension of PSL2(q), q square.
BigInt psl2_field_extension_bound(std::uint32_t q);

// (1/3)(q^2-1)(q+1)[ q^2(q^2-q+1)/(3,q+1) (q-3) - (q^3-3q^2+3q-3) ]
BigInt psu3_extension_bound(std::uint32_t q);

} // namespace quillen::formulas
