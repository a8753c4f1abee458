#include <doctest.h>

#include <random>

#include "quillen/kernels.hpp"

using namespace quillen::kernels;

namespace {

struct ScalarGuard {
    ScalarGuard() { force_scalar(false); }
    ~ScalarGuard() { force_scalar(false); }
};

} // namespace

TEST_CASE("compose kernel: scalar and dispatched variants agree") {
    ScalarGuard guard;
    std::mt19937_64 rng(7);
    for (std::size_t n : {0u, 1u, 5u, 8u, 9u, 64u, 1000u, 4099u}) {
        std::vector<std::uint32_t> a(n), b(n), d1(n, 7), d2(n, 9);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = static_cast<std::uint32_t>(rng() % (n ? n : 1));
            b[i] = static_cast<std::uint32_t>(rng() % (n ? n : 1));
        }
        detail::compose_u32_scalar(d1.data(), a.data(), b.data(), n);
        compose_u32(d2.data(), a.data(), b.data(), n);
        CHECK(d1 == d2);
    }
}

TEST_CASE("commute kernel agrees with the scalar reference") {
    ScalarGuard guard;
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + rng() % 300;
        std::vector<std::uint32_t> a(n), b(n);
        // random permutations
        for (std::size_t i = 0; i < n; ++i) a[i] = b[i] = static_cast<std::uint32_t>(i);
        std::shuffle(a.begin(), a.end(), rng);
        if (iter % 3 == 0)
            b = a; // commuting case
        else
            std::shuffle(b.begin(), b.end(), rng);
        bool s = detail::commute_u32_scalar(a.data(), b.data(), n);
        bool v = commute_u32(a.data(), b.data(), n);
        CHECK(s == v);
    }
}

TEST_CASE("modp axpy kernel: exact against scalar, including boundary values") {
    ScalarGuard guard;
    std::mt19937_64 rng(13);
    const std::uint64_t primes[] = {1073741831ull, 2147483629ull, 1500000001ull};
    for (std::uint64_t p : primes) {
        for (int iter = 0; iter < 50; ++iter) {
            std::size_t n = 1 + rng() % 200;
            std::vector<std::uint64_t> r1(n), r2(n), s(n);
            for (std::size_t i = 0; i < n; ++i) {
                // include adversarial values at the ends of the range
                std::uint64_t rv = (i % 7 == 0) ? p - 1 : rng() % p;
                std::uint64_t sv = (i % 5 == 0) ? p - 1 : rng() % p;
                r1[i] = r2[i] = rv;
                s[i] = sv;
            }
            std::uint64_t c = (iter % 4 == 0) ? p - 1 : rng() % p;
            detail::modp_axpy_u64_scalar(r1.data(), s.data(), c, p, n);
            modp_axpy_u64(r2.data(), s.data(), c, p, n);
            CHECK(r1 == r2);
            for (auto v : r2) CHECK(v < p);
        }
    }
}

TEST_CASE("force_scalar pins the scalar path") {
    force_scalar(true);
    CHECK(active() == Isa::scalar);
    force_scalar(false);
}
