#pragma once

#include <cstddef>
#include <cstdint>

// Word-level GF(2) kernels.  Everything upstream (bit vectors, elimination,
// neighborhood statistics) reduces to these few loops over packed 64-bit
// words, so they carry the SIMD variants: a scalar reference implementation
// and an AVX2 implementation selected once at startup by CPU probing.
// Equivalence of the variants is enforced by tests, not assumed.

namespace homcon::kern {

struct Ops {
    void (*xor_inplace)(uint64_t* dst, const uint64_t* src, size_t n);
    void (*and_into)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*andnot_into)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);  // a & ~b
    void (*or_inplace)(uint64_t* dst, const uint64_t* src, size_t n);
    uint64_t (*popcount)(const uint64_t* a, size_t n);
    uint64_t (*and_popcount)(const uint64_t* a, const uint64_t* b, size_t n);
    bool (*is_zero)(const uint64_t* a, size_t n);
    const char* name;
};

extern const Ops scalar_ops;

#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
bool avx2_available();
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

// The dispatched table (resolved on first use).
const Ops& ops();

// Small-size fast paths: below this many words the call indirection costs
// more than it saves, so wrappers inline a plain loop.
inline constexpr size_t kSmall = 8;

inline void xor_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    if (n < kSmall) {
        for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    } else {
        ops().xor_inplace(dst, src, n);
    }
}

inline void and_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    if (n < kSmall) {
        for (size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
    } else {
        ops().and_into(dst, a, b, n);
    }
}

inline void andnot_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    if (n < kSmall) {
        for (size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
    } else {
        ops().andnot_into(dst, a, b, n);
    }
}

inline void or_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    if (n < kSmall) {
        for (size_t i = 0; i < n; ++i) dst[i] |= src[i];
    } else {
        ops().or_inplace(dst, src, n);
    }
}

inline uint64_t popcount(const uint64_t* a, size_t n) {
    if (n < kSmall) {
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
        return c;
    }
    return ops().popcount(a, n);
}

inline uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
    if (n < kSmall) {
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i)
            c += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
        return c;
    }
    return ops().and_popcount(a, b, n);
}

inline bool is_zero(const uint64_t* a, size_t n) {
    if (n < kSmall) {
        uint64_t acc = 0;
        for (size_t i = 0; i < n; ++i) acc |= a[i];
        return acc == 0;
    }
    return ops().is_zero(a, n);
}

}  // namespace homcon::kern
