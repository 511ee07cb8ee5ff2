#include <algorithm>
#include <cmath>
#include <map>

#include "homcon/errors.hpp"
#include "homcon/invariants.hpp"
#include "homcon/subsets.hpp"

namespace homcon {

namespace {

// Matrix whose kernel is the reduced cycle space (augmentation row at i=0).
BitMatrix cycle_matrix(const SimplicialComplex& x, int i) {
    if (i == 0) {
        BitMatrix aug(1, static_cast<int>(x.face_count(0)));
        for (int c = 0; c < aug.cols(); ++c) aug.set(0, c);
        return aug;
    }
    return boundary_matrix(x, i);
}

EchelonBasis coboundary_space_1(const SimplicialComplex& x) {
    BitMatrix b1 = boundary_matrix(x, 1);
    EchelonBasis basis(b1.cols());
    for (int r = 0; r < b1.rows(); ++r) basis.insert(b1.row(r));
    return basis;
}

struct Candidate {
    BitVec support;   // over i-faces
    BitVec vertices;  // over ambient vertices
    int size;
};

// All i-cycles with support size <= ell, ascending by size.  Returns false
// (and a truncated list) if the candidate cap was hit.
bool collect_candidate_cycles(const SimplicialComplex& x, int i, int ell,
                              const SearchCaps& caps, std::vector<Candidate>& out) {
    int width = static_cast<int>(x.face_count(i));
    BitMatrix cycles = cycle_matrix(x, i);
    BitVec support_union(width);
    for (const BitVec& v : kernel_basis(cycles)) support_union |= v;
    std::vector<int> coords = support_union.to_indices();
    int u = static_cast<int>(coords.size());

    for (int s = i + 2; s <= std::min(ell, u); ++s) {
        if (binom_capped(u, s) > caps.max_support)
            throw resource_error("adapted family: support size class exceeds cap", s);
        bool capped = false;
        for_each_subset_colex(u, s, [&](const std::vector<int>& idx) {
            BitVec zeta(width);
            for (int j : idx) zeta.set(coords[static_cast<size_t>(j)]);
            if (!cycles.apply(zeta).none()) return false;
            BitVec verts(x.n_vertices());
            for (int f : zeta.to_indices()) {
                const int* fv = x.face(i, f);
                for (int k = 0; k <= i; ++k) verts.set(fv[k]);
            }
            out.push_back({std::move(zeta), std::move(verts), s});
            if (static_cast<long long>(out.size()) > caps.max_candidates) {
                capped = true;
                return true;
            }
            return false;
        });
        if (capped) return false;
    }
    return true;
}

// Exact maximum pairwise-disjoint subfamily by branch and bound.
class FamilyPacker {
public:
    FamilyPacker(const std::vector<const Candidate*>& items, DisjointnessMode mode)
        : items_(items), mode_(mode) {}

    int solve() {
        best_ = 0;
        if (items_.empty()) return 0;
        dfs(0, 0, BitVec(items_[0]->support.width()), BitVec(items_[0]->vertices.width()));
        return best_;
    }

private:
    void dfs(size_t start, int count, const BitVec& faces, const BitVec& verts) {
        best_ = std::max(best_, count);
        if (count + static_cast<int>(items_.size() - start) <= best_) return;
        for (size_t k = start; k < items_.size(); ++k) {
            const Candidate& c = *items_[k];
            bool clash = mode_ == DisjointnessMode::support ? faces.intersects(c.support)
                                                            : verts.intersects(c.vertices);
            if (clash) continue;
            BitVec nf = faces;
            nf |= c.support;
            BitVec nv = verts;
            nv |= c.vertices;
            dfs(k + 1, count + 1, nf, nv);
        }
    }

    const std::vector<const Candidate*>& items_;
    DisjointnessMode mode_;
    int best_ = 0;
};

}  // namespace

AdaptedResult k_adapted_complex(const SimplicialComplex& x, int i, int ell,
                                const SearchCaps& caps, DisjointnessMode mode) {
    if (reduced_betti(x, i) == 0) return {ExtInt::infinity(), false};
    auto classes = class_representatives(x, i, caps);

    std::vector<Candidate> cands;
    bool complete = collect_candidate_cycles(x, i, ell, caps, cands);

    ExtInt best = ExtInt::infinity();
    for (const auto& cls : classes) {
        std::vector<const Candidate*> adapted;
        for (const Candidate& c : cands)
            if (pairing(cls.representative, c.support) == 1) adapted.push_back(&c);
        FamilyPacker packer(adapted, mode);
        ExtInt size(packer.solve());
        if (size < best) best = size;
    }
    return {best, !complete};
}

AdaptedResult k_adapted_graph(const Graph& g, int i, int ell, const SearchCaps& caps,
                              DisjointnessMode mode) {
    ExtInt d = delta(g, i, caps);
    // delta infinite: no (i+1)-clique survives any deletion, so every term
    // is infinite.  delta zero: the range |C| < 0 is empty.
    if (d.is_inf() || d.value() == 0) return {ExtInt::infinity(), false};

    ExtInt best = ExtInt::infinity();
    bool partial = false;
    BitVec c(g.n());
    for (long long size = 0; size < d.value(); ++size) {
        if (binom_capped(g.n(), static_cast<int>(size)) > caps.max_subsets)
            throw resource_error("k_adapted_graph: size class exceeds cap", size);
        for_each_subset_colex(g.n(), static_cast<int>(size), [&](const std::vector<int>& idx) {
            c.reset();
            for (int v : idx) c.set(v);
            Graph h = delete_vertices(g, c);
            SimplicialComplex xc = build_clique_complex(h, i + 1, caps.max_faces);
            AdaptedResult r = k_adapted_complex(xc, i, ell, caps, mode);
            partial = partial || r.partial;
            if (r.value < best) best = r.value;
            return false;
        });
    }
    return {best, partial};
}

namespace {

bool has_dominated_vertex(const Graph& g, const VertexSet& c) {
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).subset_of(c)) return true;
    return false;
}

}  // namespace

bool satisfies_S(const Graph& g, const VertexSet& c, const BitVec& e, const SearchCaps& caps) {
    if (has_dominated_vertex(g, c)) return false;

    Graph h = delete_vertices(g, c);
    SimplicialComplex x = build_clique_complex(h, 2, caps.max_faces);
    int n_edges = static_cast<int>(x.face_count(1));
    if (e.width() != n_edges) throw validation_error("satisfies_S: E width mismatch");
    if (e.none()) return false;

    BitMatrix delta_up = boundary_matrix(x, 2).transposed();
    if (!delta_up.apply(e).none()) return false;  // not a cocycle
    EchelonBasis cob = coboundary_space_1(x);
    if (cob.contains(e)) return false;  // trivial class

    // Minimality: any strictly smaller support in the same coset disproves.
    int weight = e.count();
    for (int s = 1; s < weight; ++s) {
        if (binom_capped(n_edges, s) > caps.max_support)
            throw resource_error("satisfies_S: coset search size class exceeds cap", s);
        bool smaller = false;
        for_each_subset_colex(n_edges, s, [&](const std::vector<int>& idx) {
            BitVec cand(n_edges);
            for (int j : idx) cand.set(j);
            cand ^= e;
            if (cob.contains(cand)) {
                smaller = true;
                return true;
            }
            return false;
        });
        if (smaller) return false;
    }
    return true;
}

TrichotomyViolations triangle_trichotomy_check(const Graph& g, const VertexSet& c,
                                               const BitVec& e, const SearchCaps& caps) {
    TrichotomyViolations out;
    Graph h = delete_vertices(g, c);
    SimplicialComplex x = build_clique_complex(h, 2, caps.max_faces);
    if (e.width() != static_cast<int>(x.face_count(1)))
        throw validation_error("triangle_trichotomy_check: E width mismatch");

    const auto& labels = h.labels();
    std::vector<int> pair_buf(2);
    long long tri_count = x.face_count(2);
    for (long long t = 0; t < tri_count; ++t) {
        const int* tv = x.face(2, t);
        int in_e = 0;
        for (int drop = 0; drop < 3; ++drop) {
            int k = 0;
            for (int j = 0; j < 3; ++j)
                if (j != drop) pair_buf[static_cast<size_t>(k++)] = tv[j];
            auto pos = x.face_position(1, pair_buf.data());
            if (e.get(static_cast<int>(*pos))) ++in_e;
        }
        if (in_e != 0 && in_e != 2)
            out.bad_triangles.push_back({labels[static_cast<size_t>(tv[0])],
                                         labels[static_cast<size_t>(tv[1])],
                                         labels[static_cast<size_t>(tv[2])]});
    }

    ExtInt d1 = delta(g, 1, caps);
    if (ExtInt(c.count()) < d1) {
        long long edge_count = x.face_count(1);
        for (long long idx = 0; idx < edge_count; ++idx) {
            const int* ev = x.face(1, idx);
            if (h.neighbors(ev[0]).and_count(h.neighbors(ev[1])) == 0)
                out.uncovered_edges.emplace_back(labels[static_cast<size_t>(ev[0])],
                                                 labels[static_cast<size_t>(ev[1])]);
        }
    }
    return out;
}

FResult f_invariant(const Graph& g, int c_size_cap, const SearchCaps& caps) {
    const int n = g.n();
    c_size_cap = std::min(c_size_cap, n);
    ExtInt best = ExtInt::infinity();
    BitVec c(n);
    for (int csize = 0; csize <= c_size_cap; ++csize) {
        if (binom_capped(n, csize) > caps.max_subsets)
            throw resource_error("f_invariant: C size class exceeds cap", csize);
        for_each_subset_colex(n, csize, [&](const std::vector<int>& cidx) {
            c.reset();
            for (int v : cidx) c.set(v);
            if (has_dominated_vertex(g, c)) return false;
            Graph h = delete_vertices(g, c);
            SimplicialComplex x = build_clique_complex(h, 2, caps.max_faces);
            if (reduced_betti(x, 1) == 0) return false;

            // Sweep supports by increasing size; the first representative of
            // each class fixes that class's minimal size, and every further
            // representative of the same size still counts.
            int n_edges = static_cast<int>(x.face_count(1));
            BitMatrix delta_up = boundary_matrix(x, 2).transposed();
            EchelonBasis cob = coboundary_space_1(x);
            BitVec support_union(n_edges);
            for (const BitVec& v : kernel_basis(delta_up)) support_union |= v;
            std::vector<int> coords = support_union.to_indices();
            int u = static_cast<int>(coords.size());

            std::map<std::vector<uint64_t>, int> class_min_size;
            int classes_total = reduced_betti(x, 1) >= 62
                                    ? -1
                                    : static_cast<int>((1LL << reduced_betti(x, 1)) - 1);
            for (int s = 1; s <= u; ++s) {
                if (binom_capped(u, s) > caps.max_support)
                    throw resource_error("f_invariant: support size class exceeds cap", s);
                bool all_seen = classes_total > 0 &&
                                static_cast<int>(class_min_size.size()) == classes_total;
                if (all_seen) break;
                for_each_subset_colex(u, s, [&](const std::vector<int>& idx) {
                    BitVec chi(n_edges);
                    for (int j : idx) chi.set(coords[static_cast<size_t>(j)]);
                    if (!delta_up.apply(chi).none()) return false;
                    BitVec sig = cob.reduce(chi);
                    if (sig.none()) return false;  // trivial class
                    std::vector<uint64_t> key(sig.words(), sig.words() + sig.nwords());
                    auto [it, fresh] = class_min_size.try_emplace(std::move(key), s);
                    if (!fresh && it->second < s) return false;  // not minimal for its class
                    // E-degree: max over surviving vertices of edges at v.
                    std::vector<int> deg(static_cast<size_t>(h.n()), 0);
                    for (int eidx : chi.to_indices()) {
                        const int* ev = x.face(1, eidx);
                        ++deg[static_cast<size_t>(ev[0])];
                        ++deg[static_cast<size_t>(ev[1])];
                    }
                    int mx = *std::max_element(deg.begin(), deg.end());
                    if (ExtInt(mx) < best) best = ExtInt(mx);
                    return false;
                });
            }
            return false;
        });
    }
    return {best, c_size_cap < n};
}

ExtInt tau(const Graph& g, const SearchCaps& caps) {
    const int n = g.n();
    struct FarPair {
        int u, v;
        BitVec common;
    };
    std::vector<FarPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) pairs.push_back({u, v, g.neighbors(u) & g.neighbors(v)});
    if (pairs.size() < 2) return ExtInt::infinity();

    BitVec d(n);
    for (int size = 0; size <= n; ++size) {
        if (binom_capped(n, size) > caps.max_subsets)
            throw resource_error("tau: D size class exceeds cap", size);
        bool found = false;
        for_each_subset_colex(n, size, [&](const std::vector<int>& idx) {
            d.reset();
            for (int v : idx) d.set(v);
            int far = 0;
            for (const FarPair& p : pairs) {
                if (d.get(p.u) || d.get(p.v)) continue;
                if (p.common.subset_of(d) && ++far >= 2) {
                    found = true;
                    return true;
                }
            }
            return false;
        });
        if (found) return ExtInt(size);
    }
    return ExtInt::infinity();
}

DelicateRecord delicate_check(const Graph& g, int i, const VertexSet& c, double eps, int ell_i,
                              double r_i, double p, const SearchCaps& caps) {
    if (i < 0) throw validation_error("delicate_check: i must be >= 0");
    const double n = static_cast<double>(g.n());
    DelicateRecord rec{};
    rec.size_ok = static_cast<double>(c.count()) <= n * std::pow(p, i + 1) * (2.0 - eps);
    Graph h = delete_vertices(g, c);
    SimplicialComplex x = build_clique_complex(h, i + 1, caps.max_faces);
    rec.h_norm_ok = homology_norm_at_most(x, i, ell_i, caps);
    rec.dominated_vertex_exists = has_dominated_vertex(g, c);
    double threshold = std::pow(n, i + 1) * std::pow(p, r_i);
    rec.c_norm_ok = cocycle_norm_at_least(x, i, threshold, caps);
    rec.star_ok = rec.h_norm_ok && (rec.dominated_vertex_exists || rec.c_norm_ok);
    return rec;
}

PairTrichotomyRecord pair_trichotomy_check(const Graph& g, int i, int ell,
                                           const SearchCaps& caps) {
    PairTrichotomyRecord rec;
    rec.delta_value = delta(g, i, caps);
    rec.kappa_value = kappa(g, i, g.n(), caps).as_ext();
    AdaptedResult kg = k_adapted_graph(g, i, ell, caps);
    if (kg.partial)
        throw resource_error("pair_trichotomy_check: adapted-family value truncated");
    rec.k_ell_value = kg.value;

    rec.case_iii_holds = rec.kappa_value >= rec.delta_value;

    const ExtInt& d = rec.delta_value;
    const ExtInt& k = rec.k_ell_value;
    auto case_i_ok = [&](long long common) {
        if (d.is_inf()) return true;
        if (k.is_inf()) return common == 0;  // 0 * inf read as 0
        return 2LL * ell * d.value() >= common * k.value();
    };

    BitVec acc(g.n());
    for (int asize = 1; asize <= ell && !rec.case_i_holds; ++asize) {
        if (binom_capped(g.n(), asize) > caps.max_subsets)
            throw resource_error("pair_trichotomy_check: A enumeration exceeds cap");
        for_each_subset_colex(g.n(), asize, [&](const std::vector<int>& idx) {
            acc.fill_all();
            for (int v : idx) acc &= g.neighbors(v);
            if (case_i_ok(acc.count())) {
                rec.case_i_holds = true;
                std::vector<int> lbl;
                for (int v : idx) lbl.push_back(g.labels()[static_cast<size_t>(v)]);
                rec.witness_a = lbl;
                return true;
            }
            return false;
        });
    }

    auto case_ii_ok = [&](long long na, long long nab) {
        if (na == 0) return true;
        if (nab == 0) return d.is_inf();
        if (d.is_inf()) return true;
        return d.value() * nab >= na * na;
    };

    BitVec accu(g.n());
    for (int asize = 1; asize <= ell && !rec.case_ii_holds; ++asize) {
        for_each_subset_colex(g.n(), asize, [&](const std::vector<int>& aidx) {
            acc.fill_all();
            for (int v : aidx) acc &= g.neighbors(v);
            long long na = acc.count();
            bool stop = false;
            for_each_subset_colex(g.n(), asize, [&](const std::vector<int>& bidx) {
                for (int v : bidx)
                    for (int w : aidx)
                        if (v == w) return false;
                accu = acc;
                for (int v : bidx) accu &= g.neighbors(v);
                if (case_ii_ok(na, accu.count())) {
                    rec.case_ii_holds = true;
                    std::vector<int> la, lb;
                    for (int v : aidx) la.push_back(g.labels()[static_cast<size_t>(v)]);
                    for (int v : bidx) lb.push_back(g.labels()[static_cast<size_t>(v)]);
                    rec.witness_a = la;
                    rec.witness_b = lb;
                    stop = true;
                    return true;
                }
                return false;
            });
            return stop;
        });
    }
    return rec;
}

}  // namespace homcon
