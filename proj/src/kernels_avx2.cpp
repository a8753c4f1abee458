#include "quillen/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace quillen::kernels::detail {

void compose_u32_avx2(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), idx, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = b[a[i]];
}

bool commute_u32_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i ia = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i ib = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i ba = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), ia, 4);
        __m256i ab = _mm256_i32gather_epi32(reinterpret_cast<const int*>(a), ib, 4);
        __m256i eq = _mm256_cmpeq_epi32(ba, ab);
        if (_mm256_movemask_epi8(eq) != -1) return false;
    }
    for (; i < n; ++i)
        if (b[a[i]] != a[b[i]]) return false;
    return true;
}

namespace {

// Exact u64 <-> f64 conversion tricks for values below 2^52.
inline __m256d u64_to_f64(__m256i x) {
    // x < 2^63: split into high and low 32-bit halves.
    __m256i hi = _mm256_srli_epi64(x, 32);
    hi = _mm256_or_si256(hi, _mm256_castpd_si256(_mm256_set1_pd(19342813113834066795298816.))); // 2^84
    __m256i lo = _mm256_blend_epi16(
        x, _mm256_castpd_si256(_mm256_set1_pd(0x0010000000000000)), 0xcc); // 2^52
    __m256d f = _mm256_sub_pd(_mm256_castsi256_pd(hi),
                              _mm256_set1_pd(19342813118337666422669312.)); // 2^84 + 2^52
    return _mm256_add_pd(f, _mm256_castsi256_pd(lo));
}

inline __m256i f64_to_u64(__m256d f) {
    // requires 0 <= f < 2^52
    f = _mm256_add_pd(f, _mm256_set1_pd(0x0010000000000000));
    return _mm256_xor_si256(_mm256_castpd_si256(f),
                            _mm256_castpd_si256(_mm256_set1_pd(0x0010000000000000)));
}

} // namespace

void modp_axpy_u64_avx2(std::uint64_t* r, const std::uint64_t* s, std::uint64_t c,
                        std::uint64_t p, std::size_t n) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
        // c and s are < 2^31, so the 32x32 product is the full 64-bit product.
        __m256i t = _mm256_add_epi64(vr, _mm256_mul_epu32(vc, vs));
        // Approximate quotient via doubles, then fix up. t < 2^62 keeps the
        // float error within one quotient unit on either side.
        __m256d q = _mm256_floor_pd(_mm256_mul_pd(u64_to_f64(t), inv_p));
        __m256i qi = f64_to_u64(_mm256_max_pd(q, _mm256_setzero_pd()));
        __m256i rem = _mm256_sub_epi64(t, _mm256_mul_epu32(qi, vp));
        // rem may sit in (-2p, 2p); two correction rounds each way.
        __m256i neg = _mm256_cmpgt_epi64(zero, rem);
        rem = _mm256_add_epi64(rem, _mm256_and_si256(neg, vp));
        neg = _mm256_cmpgt_epi64(zero, rem);
        rem = _mm256_add_epi64(rem, _mm256_and_si256(neg, vp));
        __m256i ge = _mm256_cmpgt_epi64(_mm256_add_epi64(rem, _mm256_set1_epi64x(1)), vp);
        rem = _mm256_sub_epi64(rem, _mm256_and_si256(ge, vp));
        ge = _mm256_cmpgt_epi64(_mm256_add_epi64(rem, _mm256_set1_epi64x(1)), vp);
        rem = _mm256_sub_epi64(rem, _mm256_and_si256(ge, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), rem);
    }
    for (; i < n; ++i) r[i] = (r[i] + c * s[i]) % p;
}

} // namespace quillen::kernels::detail

#endif
