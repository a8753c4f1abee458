#include "quillen/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace quillen::kernels {

namespace {

std::atomic<bool> g_force_scalar{false};

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool use_avx2() {
    static const bool env_scalar = [] {
        const char* v = std::getenv("QUILLEN_FORCE_SCALAR");
        return v && v[0] && v[0] != '0';
    }();
    if (env_scalar || g_force_scalar.load(std::memory_order_relaxed)) return false;
    static const bool have = avx2_available();
    return have;
}

} // namespace

Isa active() { return use_avx2() ? Isa::avx2 : Isa::scalar; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

void compose_u32(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                 std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2()) {
        detail::compose_u32_avx2(dst, a, b, n);
        return;
    }
#endif
    detail::compose_u32_scalar(dst, a, b, n);
}

bool commute_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2()) return detail::commute_u32_avx2(a, b, n);
#endif
    return detail::commute_u32_scalar(a, b, n);
}

void modp_axpy_u64(std::uint64_t* r, const std::uint64_t* s, std::uint64_t c, std::uint64_t p,
                   std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2()) {
        detail::modp_axpy_u64_avx2(r, s, c, p, n);
        return;
    }
#endif
    detail::modp_axpy_u64_scalar(r, s, c, p, n);
}

} // namespace quillen::kernels
