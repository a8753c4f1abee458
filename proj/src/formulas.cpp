#include "quillen/formulas.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "quillen/errors.hpp"

namespace quillen::formulas {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt to_int(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw InternalError("formula produced a non-integral value");
    return boost::multiprecision::numerator(r);
}

BigInt isqrt_exact(std::uint32_t q) {
    std::uint32_t s = 1;
    while (s * s < q) ++s;
    if (s * s != q) throw ConfigError("formula needs a square q");
    return BigInt(s);
}

void need_odd_pp(std::uint32_t q, std::uint32_t min_q = 3) {
    if (q < min_q || !is_odd_prime_power(q))
        throw ConfigError("formula needs an odd prime power q >= " + std::to_string(min_q));
}

BigInt order_pgl2(const BigInt& q) { return q * (q * q - 1); }
BigInt order_pgl3(const BigInt& q) { return bpow(q, 3) * (bpow(q, 3) - 1) * (q * q - 1); }
BigInt order_pgu3(const BigInt& q) { return bpow(q, 3) * (bpow(q, 3) + 1) * (q * q - 1); }

} // namespace

int epsilon(std::uint32_t q) {
    if (q % 2 == 0) throw ConfigError("epsilon is defined for odd q");
    return q % 4 == 1 ? 1 : -1;
}

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true; // prime
}

bool is_odd_prime_power(std::uint64_t q) { return q % 2 == 1 && is_prime_power(q); }

CountPair psl2_counts(std::uint32_t q) {
    need_odd_pp(q, 5);
    const BigInt Q = q;
    const int e = epsilon(q);
    CountPair c;
    c.involutions = exact_div(Q * (Q + e), 2);
    c.four_subgroups = exact_div(Q * (Q * Q - 1), 24);
    return c;
}

CountPair pgl2_counts(std::uint32_t q) {
    need_odd_pp(q, 5);
    const BigInt Q = q;
    CountPair c;
    c.involutions = Q * Q;
    c.four_subgroups = exact_div(Q * (Q * Q - 1), 6);
    return c;
}

BigInt neg_euler_psl2(std::uint32_t q) {
    need_odd_pp(q, 5);
    const BigInt Q = q;
    const int e = epsilon(q);
    return exact_div((Q - e) * (Q * Q - (6 - e) * Q - 12 * e), 12);
}

BigInt neg_euler_pgl2(std::uint32_t q) {
    need_odd_pp(q, 5);
    const BigInt Q = q;
    return exact_div((Q - 3) * (Q * Q - 1), 3);
}

BigInt f3(std::uint32_t q) {
    const BigInt Q = q;
    return bpow(Q, 3) + 3 * Q * Q + 3 * Q + 3;
}

BigInt euler_psl3(std::uint32_t q) {
    const BigInt Q = q;
    return exact_div((Q - 1) * (Q * Q - 1) * f3(q), 3);
}

BigInt euler_psu3(std::uint32_t q) {
    const BigInt Q = q;
    return exact_div(bpow(Q, 6) - 2 * bpow(Q, 5) - bpow(Q, 4) + 2 * bpow(Q, 3) - 3 * Q * Q + 3,
                     3);
}

BigInt outer_involution_count(Family fam, std::uint32_t q, OuterType t) {
    const BigInt Q = q;
    switch (fam) {
        case Family::PSL2:
            if (t != OuterType::Field)
                throw ConfigError("PSL2 has field-type outer involutions only");
            return isqrt_exact(q) * (Q + 1);
        case Family::PSL3: {
            if (t == OuterType::Graph) {
                BigInt g = (q - 1) % 3 == 0 ? 3 : 1;
                return exact_div(order_pgl3(Q), order_pgl2(Q) * g);
            }
            BigInt s = isqrt_exact(q);
            if (t == OuterType::Field) {
                BigInt g = (s + 1) % 3 == 0 ? 3 : 1;
                return exact_div(order_pgl3(Q), order_pgl3(s) * g);
            }
            BigInt g = (s - 1) % 3 == 0 ? 3 : 1;
            return exact_div(order_pgl3(Q), order_pgu3(s) * g);
        }
        case Family::PSU3: {
            if (t != OuterType::Graph)
                throw ConfigError("PSU3 has graph-type outer involutions only");
            BigInt g = (q + 1) % 3 == 0 ? 3 : 1;
            return exact_div(Q * Q * (bpow(Q, 3) + 1), g);
        }
        default: throw ConfigError("no outer-involution count for family " + family_name(fam));
    }
}

BigInt ree_euler(std::uint32_t q) {
    need_odd_pp(q);
    const BigInt Q = q;
    BigInt quintic = bpow(Q, 5) - 8 * bpow(Q, 4) + 15 * bpow(Q, 3) + 21;
    BigInt value = exact_div((Q * Q - 1) * quintic, 21);
    if (value != ree_euler_from_normalizers(q))
        throw InternalError("Ree Euler characteristic: polynomial and class-sum paths disagree");
    return value;
}

BigInt ree_euler_from_normalizers(std::uint32_t q) {
    need_odd_pp(q);
    const Rational Q(q);
    const Rational L = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1);
    const Rational psl2_order = Q * (Q * Q - 1) / 2;
    Rational chi = -1;
    chi += L / (2 * psl2_order);
    chi -= 2 * L / (6 * (Q + 1));
    chi += 8 * L / 168;
    return to_int(chi);
}

BigInt extension_bound(const BigInt& n1, const BigInt& d_cent, const BigInt& d_base) {
    return n1 * d_cent - d_base;
}

BigInt psl2_field_extension_bound(std::uint32_t q) {
    const BigInt s = isqrt_exact(q);
    const BigInt Q = q;
    // q^(3/2) = s^3
    return exact_div((s - 1) * (Q - 1) * (bpow(s, 3) - 3 * Q - 4), 4);
}

BigInt psu3_extension_bound(std::uint32_t q) {
    need_odd_pp(q);
    const BigInt Q = q;
    const BigInt g = (q + 1) % 3 == 0 ? 3 : 1;
    BigInt inner =
        exact_div(Q * Q * (Q * Q - Q + 1), g) * (Q - 3) - (bpow(Q, 3) - 3 * Q * Q + 3 * Q - 3);
    return exact_div((Q * Q - 1) * (Q + 1) * inner, 3);
}

} // namespace quillen::formulas
