#pragma once

namespace homcon {

// Enumeration caps.  Exceeding one is an explicit resource_error, never a
// silent truncation; defaults follow the binom(n,k) <= 1e7 convention.
struct SearchCaps {
    long long max_subsets = 10'000'000;     // vertex-subset size classes
    long long max_faces = 10'000'000;       // clique enumeration
    long long max_support = 10'000'000;     // support size classes in norm searches
    long long max_classes = 1'000'000;      // nonzero cohomology classes (2^h - 1)
    long long max_candidates = 1'000'000;   // candidate cycles in adapted families
};

}  // namespace homcon
