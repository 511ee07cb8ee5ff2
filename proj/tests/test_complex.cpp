#include <algorithm>
#include <set>

#include "doctest.h"
#include "homcon/complex.hpp"
#include "homcon/errors.hpp"
#include "homcon/rng.hpp"

using namespace homcon;

namespace {

std::vector<long long> face_counts(const SimplicialComplex& x, int up_to) {
    std::vector<long long> out;
    for (int d = 0; d <= up_to; ++d) out.push_back(x.face_count(d));
    return out;
}

VertexSet make_set(int n, std::initializer_list<int> verts) {
    VertexSet s(n);
    for (int v : verts) s.set(v);
    return s;
}

Graph graph_from_edge_mask(int n, uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("clique complex face-count fixtures") {
    CHECK(face_counts(build_clique_complex(complete_graph(4), 3), 3) ==
          std::vector<long long>{4, 6, 4, 1});
    CHECK(face_counts(build_clique_complex(cycle_graph(4), 2), 2) ==
          std::vector<long long>{4, 4, 0});
    CHECK(face_counts(build_clique_complex(octahedron(), 2), 2) ==
          std::vector<long long>{6, 12, 8});
}

TEST_CASE("dimension-1 face count equals the edge count") {
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Graph g = er_sample(9, 0.4, rng.next());
        SimplicialComplex x = build_clique_complex(g, 2);
        CHECK(x.face_count(1) == g.edge_count());
    }
}

TEST_CASE("face lists are strictly lex sorted and positions resolve") {
    Graph g = er_sample(10, 0.6, 77);
    SimplicialComplex x = build_clique_complex(g, 3);
    for (int d = 0; d <= 3; ++d) {
        for (long long i = 0; i + 1 < x.face_count(d); ++i) {
            const int* a = x.face(d, i);
            const int* b = x.face(d, i + 1);
            CHECK(std::lexicographical_compare(a, a + d + 1, b, b + d + 1));
        }
        for (long long i = 0; i < x.face_count(d); ++i)
            CHECK(x.face_position(d, x.face(d, i)) == i);
    }
}

TEST_CASE("induced subcomplex fixtures") {
    SimplicialComplex k4 = build_clique_complex(complete_graph(4), 3);
    SimplicialComplex tri = induced_subcomplex(k4, make_set(4, {0, 1, 2}));
    CHECK(tri.face_count(0) == 3);
    CHECK(tri.face_count(1) == 3);
    CHECK(tri.face_count(2) == 1);

    SimplicialComplex c4 = build_clique_complex(cycle_graph(4), 2);
    SimplicialComplex diag = induced_subcomplex(c4, make_set(4, {0, 2}));
    CHECK(diag.face_count(0) == 2);
    CHECK(diag.face_count(1) == 0);

    VertexSet all(4);
    all.fill_all();
    SimplicialComplex same = induced_subcomplex(c4, all);
    for (int d = 0; d <= 2; ++d) CHECK(same.face_count(d) == c4.face_count(d));
}

TEST_CASE("flag-complex commutation: induce then build equals build then induce") {
    // Exhaustive over every graph and every vertex subset for n <= 5; the
    // n = 6 layer is covered by seeded samples to keep the suite quick.
    auto check_graph = [](const Graph& g, int n) {
        SimplicialComplex x = build_clique_complex(g, n - 1);
        for (uint32_t wmask = 0; wmask < (1u << n); ++wmask) {
            VertexSet w(n);
            for (int v = 0; v < n; ++v)
                if (wmask & (1u << v)) w.set(v);
            SimplicialComplex a = induced_subcomplex(x, w);
            VertexSet drop(n);
            drop.fill_all();
            drop.subtract(w);
            SimplicialComplex b = build_clique_complex(delete_vertices(g, drop), n - 1);
            for (int d = 0; d < n; ++d) {
                std::set<std::vector<int>> la, lb;
                for (long long f = 0; f < a.face_count(d); ++f) {
                    const int* fv = a.face(d, f);
                    std::vector<int> t;
                    for (int j = 0; j <= d; ++j)
                        t.push_back(a.vertex_labels()[static_cast<size_t>(fv[j])]);
                    la.insert(t);
                }
                for (long long f = 0; f < b.face_count(d); ++f) {
                    const int* fv = b.face(d, f);
                    std::vector<int> t;
                    for (int j = 0; j <= d; ++j)
                        t.push_back(b.vertex_labels()[static_cast<size_t>(fv[j])]);
                    lb.insert(t);
                }
                if (la != lb) return false;
            }
        }
        return true;
    };

    for (int n = 3; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << bits); ++mask)
            REQUIRE(check_graph(graph_from_edge_mask(n, mask), n));
    }
    SplitMix64 rng(55);
    for (int t = 0; t < 200; ++t)
        REQUIRE(check_graph(er_sample(6, 0.5, rng.next()), 6));
}

TEST_CASE("delete_faces_complex fixtures") {
    SimplicialComplex k3 = build_clique_complex(complete_graph(3), 2);
    SimplicialComplex boundary = delete_faces_complex(k3, {{0, 1, 2}});
    CHECK(boundary.face_count(0) == 3);
    CHECK(boundary.face_count(1) == 3);
    CHECK(boundary.face_count(2) == 0);

    SimplicialComplex k4 = build_clique_complex(complete_graph(4), 3);
    SimplicialComplex same = delete_faces_complex(k4, {});
    for (int d = 0; d <= 3; ++d) CHECK(same.face_count(d) == k4.face_count(d));

    SimplicialComplex cut = delete_faces_complex(k4, {{0, 1}});
    CHECK(cut.face_count(0) == 4);
    CHECK(cut.face_count(1) == 5);
    CHECK(cut.face_count(2) == 2);
    CHECK(cut.face_count(3) == 0);
    CHECK(cut.has_face({0, 2, 3}));
    CHECK(cut.has_face({1, 2, 3}));
}

TEST_CASE("delete_faces_complex output is downward closed") {
    SplitMix64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Graph g = er_sample(8, 0.7, rng.next());
        SimplicialComplex x = build_clique_complex(g, 4);
        std::vector<Face> u;
        u.push_back({0, 1});
        u.push_back({2, 3, 4});
        SimplicialComplex y = delete_faces_complex(x, u);
        for (int d = 1; d <= y.top_dim(); ++d) {
            for (long long f = 0; f < y.face_count(d); ++f) {
                const int* fv = y.face(d, f);
                for (int drop = 0; drop <= d; ++drop) {
                    Face sub;
                    for (int j = 0; j <= d; ++j)
                        if (j != drop) sub.push_back(fv[j]);
                    CHECK(y.has_face(sub));
                }
            }
        }
    }
}

TEST_CASE("boundary matrix fixtures") {
    SimplicialComplex c4 = build_clique_complex(cycle_graph(4), 2);
    BitMatrix d1 = boundary_matrix(c4, 1);
    CHECK(d1.rows() == 4);
    CHECK(d1.cols() == 4);
    for (int c = 0; c < 4; ++c) {
        int ones = 0;
        for (int r = 0; r < 4; ++r) ones += d1.get(r, c) ? 1 : 0;
        CHECK(ones == 2);
    }

    SimplicialComplex k3 = build_clique_complex(complete_graph(3), 2);
    BitMatrix d2 = boundary_matrix(k3, 2);
    CHECK(d2.rows() == 3);
    CHECK(d2.cols() == 1);
    for (int r = 0; r < 3; ++r) CHECK(d2.get(r, 0));

    BitMatrix d0 = boundary_matrix(c4, 0);
    CHECK(d0.rows() == 0);
    CHECK(d0.cols() == 4);
}

TEST_CASE("boundary of boundary vanishes on random clique complexes") {
    SplitMix64 rng(19);
    for (int t = 0; t < 15; ++t) {
        int n = 5 + static_cast<int>(rng.next() % 8);  // up to 12
        Graph g = er_sample(n, 0.5, rng.next());
        SimplicialComplex x = build_clique_complex(g, 5);
        for (int i = 1; i + 1 <= x.top_dim(); ++i) {
            BitMatrix lower = boundary_matrix(x, i);
            BitMatrix upper = boundary_matrix(x, i + 1);
            for (int c = 0; c < upper.cols(); ++c) {
                BitVec col(upper.rows());
                for (int r = 0; r < upper.rows(); ++r)
                    if (upper.get(r, c)) col.set(r);
                CHECK(lower.apply(col).none());
            }
        }
    }
}

TEST_CASE("face cap raises a resource error") {
    CHECK_THROWS_AS(build_clique_complex(complete_graph(20), 19, 100), resource_error);
}

TEST_CASE("complex JSON export golden") {
    SimplicialComplex k3 = build_clique_complex(complete_graph(3), 2);
    CHECK(k3.to_json() ==
          R"({"faces":{"0":[[0],[1],[2]],"1":[[0,1],[0,2],[1,2]],"2":[[0,1,2]]},"vertices":[0,1,2]})");
}

TEST_CASE("from_faces validates closure") {
    // 2-face whose edges are not all present.
    CHECK_THROWS_AS(SimplicialComplex::from_faces(
                        3, {0, 1, 2}, {{0, 1, 2}, {0, 1}, {0, 1, 2}}),
                    validation_error);
    // A valid 1-dimensional complex given explicitly.
    SimplicialComplex x = SimplicialComplex::from_faces(
        4, {0, 1, 2, 3}, {{0, 1, 2, 3}, {0, 1, 0, 2, 1, 2, 1, 3, 2, 3}});
    CHECK(x.face_count(1) == 5);
    CHECK(x.complete());
}
