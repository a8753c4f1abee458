#pragma once

#include <cstddef>
#include <cstdint>

// Inner loops shared by the permutation engine and the homology backend.
// Each kernel has a scalar reference implementation and an AVX2 variant;
// the active one is selected at runtime from CPUID. The two variants are
// equivalence-tested against each other in tests/test_kernels.cpp.
namespace quillen::kernels {

enum class Isa { scalar, avx2 };

// Currently dispatched instruction set.
Isa active();

// Pin the scalar path (tests and the QUILLEN_FORCE_SCALAR env var).
void force_scalar(bool on);

// dst[i] = b[a[i]]  (permutation composition: apply a, then b)
void compose_u32(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n);

// true iff b[a[i]] == a[b[i]] for all i
bool commute_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);

// r[i] = (r[i] + c*s[i]) mod p.  Requires r[i], s[i], c < p < 2^31.
void modp_axpy_u64(std::uint64_t* r, const std::uint64_t* s, std::uint64_t c, std::uint64_t p,
                   std::size_t n);

namespace detail {
void compose_u32_scalar(std::uint32_t*, const std::uint32_t*, const std::uint32_t*, std::size_t);
bool commute_u32_scalar(const std::uint32_t*, const std::uint32_t*, std::size_t);
void modp_axpy_u64_scalar(std::uint64_t*, const std::uint64_t*, std::uint64_t, std::uint64_t,
                          std::size_t);
#if defined(__x86_64__) || defined(_M_X64)
void compose_u32_avx2(std::uint32_t*, const std::uint32_t*, const std::uint32_t*, std::size_t);
bool commute_u32_avx2(const std::uint32_t*, const std::uint32_t*, std::size_t);
void modp_axpy_u64_avx2(std::uint64_t*, const std::uint64_t*, std::uint64_t, std::uint64_t,
                        std::size_t);
#endif
} // namespace detail

} // namespace quillen::kernels
