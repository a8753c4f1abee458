#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quillen {

// Exact arbitrary-precision integer used for group orders, Euler
// characteristics and formula evaluation.
using BigInt = boost::multiprecision::cpp_int;

// q^e for small exponents.
inline BigInt bpow(const BigInt& q, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

// Exact division; throws on a remainder, which would mean a wrong formula.
BigInt exact_div(const BigInt& num, const BigInt& den);

} // namespace quillen
