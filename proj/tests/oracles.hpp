#pragma once

// Test-side oracles: brute-force reference implementations kept independent
// of the library's search paths.  Everything here enumerates.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "homcon/complex.hpp"
#include "homcon/ext_int.hpp"
#include "homcon/f2.hpp"
#include "homcon/graph.hpp"
#include "homcon/homology.hpp"

namespace homcon::oracle {

// Minimum support of an i-cochain that is a cocycle and not a coboundary,
// by walking all 2^(#i-faces) cochains.  Requires #i-faces <= 24.
inline ExtInt cocycle_norm_exhaustive(const SimplicialComplex& x, int i) {
    int k = static_cast<int>(x.face_count(i));
    BitMatrix delta_up = boundary_matrix(x, i + 1).transposed();
    EchelonBasis cob(k);
    if (i == 0) {
        BitVec ones(k);
        for (int c = 0; c < k; ++c) ones.set(c);
        cob.insert(ones);
    } else {
        BitMatrix below = boundary_matrix(x, i);
        for (int r = 0; r < below.rows(); ++r) cob.insert(below.row(r));
    }
    long long best = -1;
    for (uint64_t mask = 1; mask < (1ULL << k); ++mask) {
        BitVec chi(k);
        for (int c = 0; c < k; ++c)
            if (mask & (1ULL << c)) chi.set(c);
        if (!delta_up.apply(chi).none()) continue;
        if (cob.contains(chi)) continue;
        long long w = chi.count();
        if (best < 0 || w < best) best = w;
    }
    return best < 0 ? ExtInt::infinity() : ExtInt(best);
}

// All cycles of the reduced cycle space, as support vectors.
inline std::vector<BitVec> all_cycles(const SimplicialComplex& x, int i) {
    int k = static_cast<int>(x.face_count(i));
    BitMatrix cyc = [&] {
        if (i == 0) {
            BitMatrix aug(1, k);
            for (int c = 0; c < k; ++c) aug.set(0, c);
            return aug;
        }
        return boundary_matrix(x, i);
    }();
    std::vector<BitVec> basis = kernel_basis(cyc);
    std::vector<BitVec> out;
    int h = static_cast<int>(basis.size());
    for (uint64_t mask = 0; mask < (1ULL << h); ++mask) {
        BitVec acc(k);
        for (int j = 0; j < h; ++j)
            if (mask & (1ULL << j)) acc ^= basis[static_cast<size_t>(j)];
        out.push_back(acc);
    }
    return out;
}

// Min over spanning sets of i-cycles of the max support, literally: every
// cycle is classified by its class, every subset of classes that forms a
// basis of H~_i is priced at max(min support in class).  Requires
// dim Z_i <= 20 and dim H~_i <= 4.
inline ExtInt homology_norm_minmax(const SimplicialComplex& x, int i) {
    int k = static_cast<int>(x.face_count(i));
    int betti = reduced_betti(x, i);
    if (betti == 0) return ExtInt(0);

    EchelonBasis boundaries(k);
    BitMatrix up_t = boundary_matrix(x, i + 1).transposed();
    for (int r = 0; r < up_t.rows(); ++r) boundaries.insert(up_t.row(r));

    // Min support per nonzero class, keyed by the reduced signature.
    std::map<std::vector<uint64_t>, std::pair<long long, BitVec>> per_class;
    for (const BitVec& z : all_cycles(x, i)) {
        BitVec sig = boundaries.reduce(z);
        if (sig.none()) continue;
        std::vector<uint64_t> key(sig.words(), sig.words() + sig.nwords());
        long long w = z.count();
        auto it = per_class.find(key);
        if (it == per_class.end())
            per_class.emplace(key, std::make_pair(w, z));
        else if (w < it->second.first)
            it->second = {w, z};
    }

    std::vector<std::pair<long long, BitVec>> classes;
    for (auto& [key, val] : per_class) classes.push_back(val);
    int m = static_cast<int>(classes.size());

    // All betti-element subsets of nonzero classes that are independent.
    ExtInt best = ExtInt::infinity();
    std::vector<int> pick(static_cast<size_t>(betti));
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == betti) {
            EchelonBasis span = boundaries;
            int base = span.rank();
            for (int j = 0; j < betti; ++j)
                span.insert(classes[static_cast<size_t>(pick[static_cast<size_t>(j)])].second);
            if (span.rank() - base != betti) return;
            long long worst = 0;
            for (int j = 0; j < betti; ++j)
                worst = std::max(worst,
                                 classes[static_cast<size_t>(pick[static_cast<size_t>(j)])].first);
            if (ExtInt(worst) < best) best = ExtInt(worst);
            return;
        }
        for (int c = from; c < m; ++c) {
            pick[static_cast<size_t>(depth)] = c;
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

// Naive kappa: try every C subset by increasing size, rebuild the complex,
// compute the betti number from scratch.
inline ExtInt kappa_naive(const Graph& g, int i) {
    const int n = g.n();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        std::function<bool(int, int)> rec = [&](int from, int depth) {
            if (depth == size) {
                VertexSet c(n);
                for (int v : idx) c.set(v);
                Graph h = delete_vertices(g, c);
                SimplicialComplex x = build_clique_complex(h, i + 1);
                return reduced_betti(x, i) > 0;
            }
            for (int v = from; v < n; ++v) {
                idx[static_cast<size_t>(depth)] = v;
                if (rec(v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return ExtInt(size);
    }
    return ExtInt::infinity();
}

// Naive delta by walking all (i+1)-subsets.
inline ExtInt delta_naive(const Graph& g, int i) {
    const int n = g.n();
    long long best = -1;
    std::vector<int> idx(static_cast<size_t>(i) + 1);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == i + 1) {
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t b = a + 1; b < idx.size(); ++b)
                    if (!g.has_edge(idx[a], idx[b])) return;
            VertexSet s(n);
            for (int v : idx) s.set(v);
            long long size = common_neighbors(g, s).count();
            if (best < 0 || size < best) best = size;
            return;
        }
        for (int v = from; v < n; ++v) {
            idx[static_cast<size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best < 0 ? ExtInt::infinity() : ExtInt(best);
}

// Naive tau: all D subsets by size, distances by pairwise common-neighbor
// scan.
inline ExtInt tau_naive(const Graph& g, int d_max) {
    const int n = g.n();
    for (int size = 0; size <= std::min(n, d_max); ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        std::function<bool(int, int)> rec = [&](int from, int depth) {
            if (depth == size) {
                VertexSet dset(n);
                for (int v : idx) dset.set(v);
                int far = 0;
                for (int u = 0; u < n; ++u) {
                    if (dset.get(u)) continue;
                    for (int v = u + 1; v < n; ++v) {
                        if (dset.get(v) || g.has_edge(u, v)) continue;
                        BitVec common = g.neighbors(u) & g.neighbors(v);
                        common.subtract(dset);
                        if (common.none()) ++far;
                    }
                }
                return far >= 2;
            }
            for (int v = from; v < n; ++v) {
                idx[static_cast<size_t>(depth)] = v;
                if (rec(v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return ExtInt(size);
    }
    return ExtInt::infinity();
}

}  // namespace homcon::oracle
