#include "doctest.h"
#include "homcon/errors.hpp"
#include "homcon/homology.hpp"
#include "homcon/rng.hpp"
#include "oracles.hpp"

using namespace homcon;

namespace {

SimplicialComplex cl(const Graph& g, int max_dim) { return build_clique_complex(g, max_dim); }

// Disjoint union of two cycle graphs.
Graph two_cycles(int a, int b) {
    Graph g(a + b);
    for (int v = 0; v < a; ++v) g.add_edge(v, (v + 1) % a);
    for (int v = 0; v < b; ++v) g.add_edge(a + v, a + (v + 1) % b);
    return g;
}

}  // namespace

TEST_CASE("reduced betti fixtures") {
    CHECK(reduced_betti(cl(cycle_graph(4), 2), 1) == 1);
    for (int i = 0; i <= 2; ++i) CHECK(reduced_betti(cl(complete_graph(4), 3), i) == 0);
    CHECK(reduced_betti(cl(octahedron(), 3), 2) == 1);

    // Void complex conventions.
    SimplicialComplex void_complex = cl(Graph(0), 0);
    CHECK(reduced_betti(void_complex, -1) == 1);
    CHECK(reduced_betti(void_complex, 0) == 0);
    CHECK(reduced_betti(void_complex, 3) == 0);
    CHECK(reduced_betti(cl(Graph(1), 1), -1) == 0);
}

TEST_CASE("truncated complexes refuse betti queries they cannot answer") {
    // C_4 built only to dimension 1: whether 2-faces exist was never checked.
    SimplicialComplex shallow = cl(cycle_graph(4), 1);
    CHECK_THROWS_AS(reduced_betti(shallow, 1), validation_error);
    // Built to dimension 2 the enumeration saturates, so anything goes.
    SimplicialComplex deep = cl(cycle_graph(4), 2);
    CHECK(deep.complete());
    CHECK(reduced_betti(deep, 5) == 0);
}

TEST_CASE("betti_0 counts components minus one") {
    SplitMix64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Graph g = er_sample(9, 0.25, rng.next());
        SimplicialComplex x = cl(g, 1 + 1);
        // Independent component count by label propagation.
        std::vector<int> comp(9, -1);
        int comps = 0;
        for (int v = 0; v < 9; ++v) {
            if (comp[static_cast<size_t>(v)] >= 0) continue;
            ++comps;
            std::vector<int> stack{v};
            comp[static_cast<size_t>(v)] = v;
            while (!stack.empty()) {
                int x2 = stack.back();
                stack.pop_back();
                for (int y : g.neighbors(x2).to_indices())
                    if (comp[static_cast<size_t>(y)] < 0) {
                        comp[static_cast<size_t>(y)] = v;
                        stack.push_back(y);
                    }
            }
        }
        CHECK(reduced_betti(x, 0) == comps - 1);
    }
}

TEST_CASE("euler characteristic identity on random clique complexes") {
    SplitMix64 rng(43);
    for (int t = 0; t < 15; ++t) {
        int n = 4 + static_cast<int>(rng.next() % 7);  // up to 10
        Graph g = er_sample(n, 0.5, rng.next());
        SimplicialComplex x = cl(g, n - 1);
        std::vector<int> betti = all_reduced_betti(x);
        long long faces_alt = 0, betti_alt = 0;
        for (int d = 0; d <= x.top_dim(); ++d)
            faces_alt += (d % 2 == 0 ? 1 : -1) * x.face_count(d);
        for (int d = 0; d + 1 < static_cast<int>(betti.size()); ++d)
            betti_alt += (d % 2 == 0 ? 1 : -1) * betti[static_cast<size_t>(d) + 1];
        CHECK(faces_alt == betti_alt + 1);
    }
}

TEST_CASE("pairing fixtures") {
    BitVec chi(4), zeta(4);
    chi.set(1);
    zeta.set(1);
    CHECK(pairing(chi, zeta) == 1);
    BitVec zero(4);
    CHECK(pairing(zero, zeta) == 0);

    // C_4: one edge against the full cycle.
    BitVec edge(4), cycle(4);
    edge.set(0);
    for (int e = 0; e < 4; ++e) cycle.set(e);
    CHECK(pairing(edge, cycle) == 1);

    BitVec wrong(3);
    CHECK_THROWS_AS(pairing(chi, wrong), validation_error);
}

TEST_CASE("pairing is bilinear and descends to classes") {
    SplitMix64 rng(47);
    for (int t = 0; t < 25; ++t) {
        int n = 5 + static_cast<int>(rng.next() % 4);
        Graph g = er_sample(n, 0.5, rng.next());
        SimplicialComplex x = cl(g, 2);
        int k = static_cast<int>(x.face_count(1));
        if (k == 0) continue;

        BitMatrix delta_up = boundary_matrix(x, 2).transposed();
        std::vector<BitVec> cocycles = kernel_basis(delta_up);
        std::vector<BitVec> cycles = kernel_basis(boundary_matrix(x, 1));
        if (cocycles.empty() || cycles.empty()) continue;

        const BitVec& chi = cocycles[rng.next() % cocycles.size()];
        const BitVec& zeta = cycles[rng.next() % cycles.size()];

        // Bilinearity.
        const BitVec& chi2 = cocycles[rng.next() % cocycles.size()];
        BitVec sum = chi ^ chi2;
        CHECK(pairing(sum, zeta) == (pairing(chi, zeta) ^ pairing(chi2, zeta)));

        // Coboundary and boundary shifts do not change the value.
        BitMatrix b1 = boundary_matrix(x, 1);
        if (b1.rows() > 0) {
            BitVec cob = b1.row(static_cast<int>(rng.next() % static_cast<uint64_t>(b1.rows())));
            CHECK(pairing(chi ^ cob, zeta) == pairing(chi, zeta));
        }
        BitMatrix up_t = delta_up;
        if (up_t.rows() > 0) {
            BitVec bnd = up_t.row(static_cast<int>(rng.next() % static_cast<uint64_t>(up_t.rows())));
            CHECK(pairing(chi, zeta ^ bnd) == pairing(chi, zeta));
        }
    }
}

TEST_CASE("cocycle norm fixtures") {
    SearchCaps caps;
    CHECK(cocycle_norm(cl(cycle_graph(4), 2), 1, caps) == ExtInt(1));
    CHECK(cocycle_norm(cl(complete_graph(4), 2), 1, caps).is_inf());
    CHECK(cocycle_norm(cl(cycle_graph(5), 2), 1, caps) == ExtInt(1));
}

TEST_CASE("cocycle norm matches the exhaustive oracle") {
    SearchCaps caps;
    SplitMix64 rng(53);
    int done = 0;
    while (done < 40) {
        int n = 5 + static_cast<int>(rng.next() % 3);
        Graph g = er_sample(n, 0.45, rng.next());
        if (g.edge_count() > 16) continue;
        SimplicialComplex x = cl(g, 2);
        CHECK(cocycle_norm(x, 1, caps) == oracle::cocycle_norm_exhaustive(x, 1));
        ++done;
    }
    // Dimension 0 as well.
    for (int t = 0; t < 10; ++t) {
        Graph g = er_sample(6, 0.3, rng.next());
        SimplicialComplex x = cl(g, 1 + 1);
        CHECK(cocycle_norm(x, 0, caps) == oracle::cocycle_norm_exhaustive(x, 0));
    }
}

TEST_CASE("homology norm fixtures") {
    SearchCaps caps;
    CHECK(homology_norm(cl(cycle_graph(4), 2), 1, caps) == ExtInt(4));
    CHECK(homology_norm(cl(complete_graph(4), 2), 1, caps) == ExtInt(0));

    // Two disjoint triangles with the 2-faces removed.
    Graph tri2 = two_cycles(3, 3);
    SimplicialComplex x = delete_faces_complex(cl(tri2, 2), {{0, 1, 2}, {3, 4, 5}});
    CHECK(homology_norm(x, 1, caps) == ExtInt(3));

    // Disjoint 4-cycle and 5-cycle: spanning needs the support-5 class.
    CHECK(homology_norm(cl(two_cycles(4, 5), 2), 1, caps) == ExtInt(5));
}

TEST_CASE("homology norm matches the min-max-over-bases oracle") {
    SearchCaps caps;
    SplitMix64 rng(59);
    int done = 0;
    while (done < 30) {
        int n = 5 + static_cast<int>(rng.next() % 3);
        Graph g = er_sample(n, 0.4, rng.next());
        if (g.edge_count() > 16) continue;
        SimplicialComplex x = cl(g, 2);
        if (reduced_betti(x, 1) > 3) continue;
        CHECK(homology_norm(x, 1, caps) == oracle::homology_norm_minmax(x, 1));
        ++done;
    }
}

TEST_CASE("bounded norm probes agree with the exact values") {
    SearchCaps caps;
    SplitMix64 rng(61);
    for (int t = 0; t < 15; ++t) {
        Graph g = er_sample(6, 0.45, rng.next());
        SimplicialComplex x = cl(g, 2);
        ExtInt hn = homology_norm(x, 1, caps);
        for (long long bound : {0LL, 1LL, 3LL, 5LL, 9LL})
            CHECK(homology_norm_at_most(x, 1, bound, caps) == (hn <= ExtInt(bound)));
        ExtInt cn = cocycle_norm(x, 1, caps);
        for (double thr : {0.5, 1.0, 2.0, 3.5})
            CHECK(cocycle_norm_at_least(x, 1, thr, caps) == cn.at_least(thr));
    }
}

TEST_CASE("class representatives fixtures") {
    SearchCaps caps;
    auto reps_c4 = class_representatives(cl(cycle_graph(4), 2), 1, caps);
    CHECK(reps_c4.size() == 1);
    CHECK(reps_c4[0].is_nontrivial);

    CHECK(class_representatives(cl(complete_graph(4), 2), 1, caps).empty());

    auto reps_two = class_representatives(cl(two_cycles(4, 4), 2), 1, caps);
    CHECK(reps_two.size() == 3);

    // Representatives are cocycles, pairwise in distinct classes.
    SimplicialComplex x = cl(two_cycles(4, 4), 2);
    BitMatrix delta_up = boundary_matrix(x, 2).transposed();
    BitMatrix b1 = boundary_matrix(x, 1);
    EchelonBasis cob(static_cast<int>(x.face_count(1)));
    for (int r = 0; r < b1.rows(); ++r) cob.insert(b1.row(r));
    for (size_t a = 0; a < reps_two.size(); ++a) {
        CHECK(delta_up.apply(reps_two[a].representative).none());
        CHECK_FALSE(cob.contains(reps_two[a].representative));
        for (size_t b = a + 1; b < reps_two.size(); ++b)
            CHECK_FALSE(cob.contains(reps_two[a].representative ^ reps_two[b].representative));
    }

    SearchCaps tight;
    tight.max_classes = 2;
    CHECK_THROWS_AS(class_representatives(cl(two_cycles(4, 4), 2), 1, tight), resource_error);
}
