#pragma once

#include <cstdint>
#include <vector>

namespace homcon {

// binom(n, k) saturating at 2^62 (only ever compared against caps).
inline long long binom_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    const long long cap = 1LL << 62;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        double est = static_cast<double>(r) * (n - k + i) / i;
        if (est >= static_cast<double>(cap)) return cap;
        r = r * (n - k + i) / i;  // exact: product of i consecutive integers divides by i!
    }
    return r;
}

// Enumerates k-subsets of {0..n-1} in colexicographic order (sorted by the
// largest element, ties by the next, ...), calling fn(const std::vector<int>&)
// for each.  fn returning true stops the enumeration early.
template <typename Fn>
void for_each_subset_colex(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        if (fn(idx)) return;
        // Colex successor: bump the smallest index that can move without
        // touching the ones above it, then pack everything below it left.
        int j = 0;
        while (j + 1 < k && idx[static_cast<size_t>(j)] + 1 == idx[static_cast<size_t>(j + 1)]) ++j;
        if (idx[static_cast<size_t>(j)] + 1 >= n) return;
        ++idx[static_cast<size_t>(j)];
        for (int i = 0; i < j; ++i) idx[static_cast<size_t>(i)] = i;
    }
}

}  // namespace homcon
