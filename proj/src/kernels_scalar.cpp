#include "quillen/kernels.hpp"

namespace quillen::kernels::detail {

void compose_u32_scalar(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = b[a[i]];
}

bool commute_u32_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (b[a[i]] != a[b[i]]) return false;
    return true;
}

void modp_axpy_u64_scalar(std::uint64_t* r, const std::uint64_t* s, std::uint64_t c,
                          std::uint64_t p, std::size_t n) {
    // c*s[i] < 2^62 and r[i] < 2^31, so the sum never overflows 64 bits.
    for (std::size_t i = 0; i < n; ++i) r[i] = (r[i] + c * s[i]) % p;
}

} // namespace quillen::kernels::detail
