#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "homcon/errors.hpp"
#include "homcon/hochster.hpp"
#include "homcon/rng.hpp"
#include "oracles.hpp"

using namespace homcon;

namespace {

SimplicialComplex full_cl(const Graph& g) {
    return build_clique_complex(g, std::max(0, g.n() - 1));
}

Graph two_isolated() { return Graph(2); }

Graph graph_from_edge_mask(int n, uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

// Coefficients of sum_{faces F, incl. empty} t^{|F|} (1-t)^{n-|F|}: the
// numerator polynomial of the Hilbert series, computed from the f-vector
// alone.  Independent of any Betti computation.
std::vector<long long> k_polynomial(const SimplicialComplex& x, int n) {
    std::vector<long long> coeff(static_cast<size_t>(n) + 1, 0);
    auto add_term = [&](int k, long long count) {
        // count * t^k * (1-t)^(n-k)
        long long binom = 1;
        for (int j = 0; j <= n - k; ++j) {
            if (j > 0) binom = binom * (n - k - j + 1) / j;
            long long sign = (j % 2 == 0) ? 1 : -1;
            coeff[static_cast<size_t>(k + j)] += count * sign * binom;
        }
    };
    add_term(0, 1);  // empty face
    for (int d = 0; d <= x.top_dim(); ++d) add_term(d + 1, x.face_count(d));
    return coeff;
}

}  // namespace

TEST_CASE("betti table fixtures") {
    BettiTable c4 = betti_table(full_cl(cycle_graph(4)), 4);
    CHECK(c4.at(0, 0) == 1);
    CHECK(c4.at(1, 2) == 2);
    CHECK(c4.at(2, 4) == 1);
    CHECK(c4.entries.size() == 3);

    BettiTable k5 = betti_table(full_cl(complete_graph(5)), 5);
    CHECK(k5.at(0, 0) == 1);
    CHECK(k5.entries.size() == 1);

    BettiTable pts = betti_table(full_cl(two_isolated()), 2);
    CHECK(pts.at(0, 0) == 1);
    CHECK(pts.at(1, 2) == 1);
    CHECK(pts.entries.size() == 2);
}

TEST_CASE("betti vanishing below the diagonal") {
    SplitMix64 rng(103);
    for (int t = 0; t < 10; ++t) {
        Graph g = er_sample(7, 0.5, rng.next());
        BettiTable b = betti_table(full_cl(g), 7);
        for (const auto& [key, val] : b.entries) {
            auto [i, l] = key;
            CHECK(val > 0);
            if (!(i == 0 && l == 0)) CHECK(l > i);
        }
    }
}

TEST_CASE("betti table is invariant under vertex relabeling") {
    SplitMix64 rng(107);
    for (int t = 0; t < 6; ++t) {
        Graph g = er_sample(7, 0.45, rng.next());
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = 6; j > 0; --j)
            std::swap(perm[static_cast<size_t>(j)],
                      perm[static_cast<size_t>(rng.next() % static_cast<uint64_t>(j + 1))]);
        Graph h(7);
        for (auto [u, v] : g.edges())
            h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        BettiTable a = betti_table(full_cl(g), 7);
        BettiTable b = betti_table(full_cl(h), 7);
        CHECK(a.entries == b.entries);
    }
}

TEST_CASE("alternating sums match the f-vector polynomial") {
    SplitMix64 rng(109);
    for (int t = 0; t < 10; ++t) {
        int n = 4 + static_cast<int>(rng.next() % 3);
        Graph g = er_sample(n, 0.5, rng.next());
        SimplicialComplex x = full_cl(g);
        BettiTable b = betti_table(x, n);
        std::vector<long long> kpoly = k_polynomial(x, n);
        for (int d = 0; d <= n; ++d) {
            long long alt = 0;
            for (const auto& [key, val] : b.entries) {
                auto [i, l] = key;
                if (l == d) alt += (i % 2 == 0 ? 1 : -1) * val;
            }
            CHECK(alt == kpoly[static_cast<size_t>(d)]);
        }
    }
}

TEST_CASE("strand length fixtures") {
    BettiTable c4 = betti_table(full_cl(cycle_graph(4)), 4);
    CHECK(strand_length(c4, 1) == 1);
    CHECK(strand_length(c4, 2) == 2);
    CHECK(strand_length(c4, 0) == 0);  // beta_{0,0}
    CHECK_FALSE(strand_length(c4, 3).has_value());

    BettiTable k4 = betti_table(full_cl(complete_graph(4)), 4);
    CHECK_FALSE(strand_length(k4, 1).has_value());
    CHECK(strand_length(k4, 0) == 0);

    BettiTable pts = betti_table(full_cl(two_isolated()), 2);
    CHECK(strand_length(pts, 1) == 1);
}

TEST_CASE("projective dimension fixtures") {
    CHECK(projective_dimension(betti_table(full_cl(cycle_graph(4)), 4)) == 2);
    CHECK(projective_dimension(betti_table(full_cl(complete_graph(6)), 6)) == 0);
    CHECK(projective_dimension(betti_table(full_cl(two_isolated()), 2)) == 1);
}

TEST_CASE("strand-kappa identity fixtures") {
    SearchCaps caps;
    StrandKappaRecord c4_1 = strand_kappa_identity_check(cycle_graph(4), 1, caps);
    CHECK(c4_1.lambda == 1);
    CHECK(c4_1.kappa_prev == ExtInt(2));
    CHECK(c4_1.consistent);

    StrandKappaRecord c4_2 = strand_kappa_identity_check(cycle_graph(4), 2, caps);
    CHECK(c4_2.lambda == 2);
    CHECK(c4_2.kappa_prev == ExtInt(0));
    CHECK(c4_2.consistent);

    StrandKappaRecord k4_1 = strand_kappa_identity_check(complete_graph(4), 1, caps);
    CHECK_FALSE(k4_1.lambda.has_value());
    CHECK(k4_1.kappa_prev.is_inf());
    CHECK(k4_1.consistent);

    StrandKappaRecord pts = strand_kappa_identity_check(two_isolated(), 1, caps);
    CHECK(pts.lambda == 1);
    CHECK(pts.kappa_prev == ExtInt(0));
    CHECK(pts.consistent);
}

TEST_CASE("strand-kappa identity on random graphs") {
    SearchCaps caps;
    SplitMix64 rng(113);
    for (int t = 0; t < 25; ++t) {
        Graph g = er_sample(6, 0.5, rng.next());
        for (int i : {1, 2}) {
            StrandKappaRecord rec = strand_kappa_identity_check(g, i, caps);
            CHECK(rec.consistent);
        }
    }
}

TEST_CASE("module norm re-exports") {
    SearchCaps caps;
    CHECK(module_norm_upper(cycle_graph(4), 1, caps) == ExtInt(1));
    CHECK(module_norm_upper(complete_graph(4), 1, caps).is_inf());
    CHECK(module_norm_upper(cycle_graph(5), 1, caps) == ExtInt(1));

    CHECK(module_norm_lower(cycle_graph(4), 1, caps) == ExtInt(4));
    CHECK(module_norm_lower(complete_graph(4), 1, caps) == ExtInt(0));

    Graph two(9);
    for (int v = 0; v < 4; ++v) two.add_edge(v, (v + 1) % 4);
    for (int v = 0; v < 5; ++v) two.add_edge(4 + v, 4 + (v + 1) % 5);
    CHECK(module_norm_lower(two, 1, caps) == ExtInt(5));
}

TEST_CASE("deleted-face kernel characterization matches the cocycle norm") {
    // Minimum number of i-faces whose removal kills some nonzero class under
    // the restriction map, computed by brute force with delete_faces_complex.
    SearchCaps caps;
    auto min_killing_u = [&](const Graph& g, int i) -> ExtInt {
        SimplicialComplex x = full_cl(g);
        int k = static_cast<int>(x.face_count(i));
        auto classes = class_representatives(x, i, caps);
        if (classes.empty()) return ExtInt::infinity();
        for (int r = 1; r <= k; ++r) {
            bool killed = false;
            std::vector<int> idx(static_cast<size_t>(r));
            std::function<bool(int, int)> rec = [&](int from, int depth) {
                if (depth == r) {
                    std::vector<Face> u;
                    for (int fi : idx) {
                        const int* fv = x.face(i, fi);
                        u.emplace_back(fv, fv + i + 1);
                    }
                    SimplicialComplex y = delete_faces_complex(x, u);
                    // Restriction of each class rep: does some nonzero class
                    // become a coboundary (or vanish) in y?
                    long long yk = y.face_count(i);
                    EchelonBasis cob(static_cast<int>(yk));
                    if (i == 0) {
                        BitVec ones(static_cast<int>(yk));
                        for (int c = 0; c < static_cast<int>(yk); ++c) ones.set(c);
                        cob.insert(ones);
                    } else {
                        BitMatrix below = boundary_matrix(y, i);
                        for (int r2 = 0; r2 < below.rows(); ++r2) cob.insert(below.row(r2));
                    }
                    for (const auto& cls : classes) {
                        BitVec restricted(static_cast<int>(yk));
                        for (long long f = 0; f < yk; ++f) {
                            auto pos = x.face_position(i, y.face(i, f));
                            if (pos && cls.representative.get(static_cast<int>(*pos)))
                                restricted.set(static_cast<int>(f));
                        }
                        if (cob.contains(restricted)) return true;
                    }
                    return false;
                }
                for (int v = from; v < k; ++v) {
                    idx[static_cast<size_t>(depth)] = v;
                    if (rec(v + 1, depth + 1)) return true;
                }
                return false;
            };
            if (rec(0, 0)) {
                killed = true;
            }
            if (killed) return ExtInt(r);
        }
        return ExtInt::infinity();
    };

    for (const Graph& g : {cycle_graph(4), cycle_graph(5)}) {
        CHECK(min_killing_u(g, 1) == module_norm_upper(g, 1, caps));
    }
    SplitMix64 rng(127);
    int tested = 0;
    for (int t = 0; t < 40 && tested < 8; ++t) {
        Graph g = er_sample(6, 0.45, rng.next());
        SimplicialComplex x = full_cl(g);
        if (reduced_betti(x, 1) == 0 || x.face_count(1) > 12) continue;
        CHECK(min_killing_u(g, 1) == module_norm_upper(g, 1, caps));
        ++tested;
    }
    CHECK(tested > 0);
}

TEST_CASE("nonface generators") {
    auto c4 = nonface_generators(cycle_graph(4));
    CHECK(c4 == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(nonface_generators(complete_graph(5)).empty());
    auto empty3 = nonface_generators(Graph(3));
    CHECK(empty3 == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("betti table guards") {
    CHECK_THROWS_AS(betti_table(full_cl(er_sample(18, 0.5, 1)), 18), resource_error);
    SimplicialComplex shallow = build_clique_complex(er_sample(8, 0.9, 3), 2);
    if (!shallow.complete()) CHECK_THROWS_AS(betti_table(shallow, 8), validation_error);
}

TEST_CASE("betti csv and grid emission") {
    BettiTable c4 = betti_table(full_cl(cycle_graph(4)), 4);
    CHECK(c4.to_csv() == "i,j,internal,beta\n0,0,0,1\n1,1,2,2\n2,2,4,1\n");
    std::string grid = c4.to_grid();
    CHECK(grid.find("strand") != std::string::npos);
}
