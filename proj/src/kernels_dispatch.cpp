#include "homcon/kernels.hpp"

namespace homcon::kern {

namespace {

const Ops* resolve() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return &avx2_ops;
#elif defined(__aarch64__)
    return &neon_ops;
#endif
    return &scalar_ops;
}

}  // namespace

const Ops& ops() {
    static const Ops* table = resolve();
    return *table;
}

}  // namespace homcon::kern
