#include "homcon/hochster.hpp"

#include <algorithm>
#include <sstream>

#include "homcon/errors.hpp"
#include "homcon/homology.hpp"

namespace homcon {

std::string BettiTable::to_csv() const {
    std::ostringstream os;
    os << "i,j,internal,beta\n";
    // Emitted strand-major: j is the strand index, i the homological degree.
    std::map<std::pair<int, int>, long long> by_strand;
    for (const auto& [key, val] : entries) {
        auto [i, l] = key;
        by_strand[{l - i, i}] = val;
    }
    for (const auto& [key, val] : by_strand) {
        auto [j, i] = key;
        os << i << "," << j << "," << (i + j) << "," << val << "\n";
    }
    return os.str();
}

std::string BettiTable::to_grid() const {
    int max_strand = 0, max_h = 0;
    for (const auto& [key, val] : entries) {
        auto [i, l] = key;
        max_strand = std::max(max_strand, l - i);
        max_h = std::max(max_h, i);
    }
    std::ostringstream os;
    os << "strand\\h";
    for (int i = 0; i <= max_h; ++i) os << "\t" << i;
    os << "\n";
    for (int j = 0; j <= max_strand; ++j) {
        os << j;
        for (int i = 0; i <= max_h; ++i) {
            long long v = at(i, i + j);
            os << "\t";
            if (v)
                os << v;
            else
                os << ".";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// True if some vertex of y coexists with every face: for each face F not
// containing v, F u {v} must also be a face.  Cones have vanishing reduced
// cohomology in every degree, which skips the rank work entirely.
bool is_cone(const SimplicialComplex& y) {
    std::vector<int> verts;
    long long n0 = y.face_count(0);
    for (long long i = 0; i < n0; ++i) verts.push_back(*y.face(0, i));
    for (int v : verts) {
        bool cone = true;
        std::vector<int> ext;
        for (int d = 0; d <= y.top_dim() && cone; ++d) {
            long long cnt = y.face_count(d);
            for (long long f = 0; f < cnt && cone; ++f) {
                const int* fv = y.face(d, f);
                bool contains = false;
                for (int j = 0; j <= d; ++j) contains = contains || fv[j] == v;
                if (contains) continue;
                ext.assign(fv, fv + d + 1);
                ext.insert(std::upper_bound(ext.begin(), ext.end(), v), v);
                if (!y.face_position(d + 1, ext.data())) cone = false;
            }
        }
        if (cone) return true;
    }
    return false;
}

}  // namespace

BettiTable betti_table(const SimplicialComplex& x, int n, int n_cap) {
    if (n != x.n_vertices())
        throw validation_error("betti_table: ambient vertex count mismatch");
    if (n > n_cap) throw resource_error("betti_table: n exceeds subset enumeration cap");
    if (!x.complete())
        throw validation_error("betti_table: complex must be built to full dimension");

    BettiTable table;
    table.n = n;
    VertexSet w(n);
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        w.reset();
        for (int v = 0; v < n; ++v)
            if (mask & (1ULL << v)) w.set(v);
        int wsize = w.count();
        SimplicialComplex sub = induced_subcomplex(x, w);
        if (sub.face_count(0) > 0 && is_cone(sub)) continue;
        std::vector<int> betti = all_reduced_betti(sub);  // betti[j] = b_{j-1}
        for (int j = 0; j < static_cast<int>(betti.size()); ++j) {
            if (betti[static_cast<size_t>(j)] == 0) continue;
            int hom_degree = wsize - j;
            table.entries[{hom_degree, wsize}] += betti[static_cast<size_t>(j)];
        }
    }
    return table;
}

std::optional<int> strand_length(const BettiTable& b, int i) {
    std::optional<int> lambda;
    for (const auto& [key, val] : b.entries) {
        auto [h, l] = key;
        if (l - h == i && val != 0 && (!lambda || h > *lambda)) lambda = h;
    }
    return lambda;
}

int projective_dimension(const BettiTable& b) {
    int pdim = 0;
    for (const auto& [key, val] : b.entries) {
        if (val != 0) pdim = std::max(pdim, key.first);
    }
    return pdim;
}

StrandKappaRecord strand_kappa_identity_check(const Graph& g, int i, const SearchCaps& caps) {
    if (i < 1) throw validation_error("strand_kappa_identity_check: i must be >= 1");
    const int n = g.n();
    SimplicialComplex x = build_clique_complex(g, std::max(0, n - 1), caps.max_faces);
    BettiTable table = betti_table(x, n);
    StrandKappaRecord rec;
    rec.n = n;
    rec.i = i;
    rec.lambda = strand_length(table, i);
    rec.kappa_prev = kappa(g, i - 1, n, caps).as_ext();
    if (rec.kappa_prev.is_inf())
        rec.consistent = !rec.lambda.has_value();
    else
        rec.consistent = rec.lambda.has_value() &&
                         static_cast<long long>(*rec.lambda) == n - i - rec.kappa_prev.value();
    return rec;
}

ExtInt module_norm_upper(const Graph& g, int i, const SearchCaps& caps) {
    SimplicialComplex x = build_clique_complex(g, i + 1, caps.max_faces);
    return cocycle_norm(x, i, caps);
}

ExtInt module_norm_lower(const Graph& g, int i, const SearchCaps& caps) {
    SimplicialComplex x = build_clique_complex(g, i + 1, caps.max_faces);
    return homology_norm(x, i, caps);
}

std::vector<std::pair<int, int>> nonface_generators(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

}  // namespace homcon
