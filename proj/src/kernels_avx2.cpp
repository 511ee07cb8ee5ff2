#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "homcon/kernels.hpp"

// AVX2 variants.  Compiled with per-function target attributes so the TU
// builds without global -mavx2; nothing here runs unless the dispatcher saw
// AVX2 in CPUID.  Popcount uses the in-register nibble lookup (there is no
// 256-bit popcount instruction below AVX-512).

namespace homcon::kern {

namespace {

#define HOMCON_AVX2 __attribute__((target("avx2")))

HOMCON_AVX2 void v_xor_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

HOMCON_AVX2 void v_and_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(x, y));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

HOMCON_AVX2 void v_andnot_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // _mm256_andnot_si256(y, x) computes ~y & x
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(y, x));
    }
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

HOMCON_AVX2 void v_or_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

HOMCON_AVX2 inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

HOMCON_AVX2 inline uint64_t hsum64(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<uint64_t>(_mm_cvtsi128_si64(s)) +
           static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

HOMCON_AVX2 uint64_t v_popcount(const uint64_t* a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    uint64_t c = hsum64(acc);
    for (; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

HOMCON_AVX2 uint64_t v_and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(x, y)));
    }
    uint64_t c = hsum64(acc);
    for (; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

HOMCON_AVX2 bool v_is_zero(const uint64_t* a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    }
    uint64_t tail = 0;
    for (; i < n; ++i) tail |= a[i];
    return tail == 0 && _mm256_testz_si256(acc, acc);
}

#undef HOMCON_AVX2

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

const Ops avx2_ops = {
    v_xor_inplace, v_and_into, v_andnot_into, v_or_inplace,
    v_popcount,    v_and_popcount, v_is_zero,  "avx2",
};

}  // namespace homcon::kern

#endif  // x86_64
