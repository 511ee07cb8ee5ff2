#include "homcon/kernels.hpp"

namespace homcon::kern {

namespace {

void s_xor_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void s_and_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_andnot_into(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void s_or_inplace(uint64_t* dst, const uint64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

uint64_t s_popcount(const uint64_t* a, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

uint64_t s_and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

bool s_is_zero(const uint64_t* a, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc |= a[i];
    return acc == 0;
}

}  // namespace

const Ops scalar_ops = {
    s_xor_inplace, s_and_into, s_andnot_into, s_or_inplace,
    s_popcount,    s_and_popcount, s_is_zero,  "scalar",
};

}  // namespace homcon::kern
