#if defined(__aarch64__)

#include <arm_neon.h>

#include "homcon/kernels.hpp"

// NEON variants (baseline on aarch64, no runtime probe needed).

namespace homcon::kern {

namespace {

void n_xor_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

void n_and_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void n_andnot_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void n_or_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

inline uint64_t popcount128(uint64x2_t v) {
    uint8x16_t c = vcntq_u8(vreinterpretq_u8_u64(v));
    return vaddvq_u8(c);
}

uint64_t n_popcount(const uint64_t* a, size_t n) {
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) c += popcount128(vld1q_u64(a + i));
    for (; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

uint64_t n_and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2)
        c += popcount128(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

bool n_is_zero(const uint64_t* a, size_t n) {
    uint64_t acc = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t v = vld1q_u64(a + i);
        acc |= vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1);
    }
    for (; i < n; ++i) acc |= a[i];
    return acc == 0;
}

}  // namespace

const Ops neon_ops = {
    n_xor_inplace, n_and_into, n_andnot_into, n_or_inplace,
    n_popcount,    n_and_popcount, n_is_zero,  "neon",
};

}  // namespace homcon::kern

#endif  // __aarch64__
