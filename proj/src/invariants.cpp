#include "homcon/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>

#include "homcon/errors.hpp"
#include "homcon/subsets.hpp"

namespace homcon {

ExtInt delta(const Graph& g, int i, const SearchCaps& caps) {
    if (i < 0) throw validation_error("delta: i must be >= 0");
    SimplicialComplex x = build_clique_complex(g, i, caps.max_faces);
    long long cnt = x.face_count(i);
    if (cnt == 0) return ExtInt::infinity();
    long long best = -1;
    BitVec acc(g.n());
    for (long long f = 0; f < cnt; ++f) {
        const int* verts = x.face(i, f);
        acc.fill_all();
        for (int j = 0; j <= i; ++j) acc &= g.neighbors(verts[j]);
        long long size = acc.count();
        if (best < 0 || size < best) best = size;
        if (best == 0) break;
    }
    return ExtInt(best);
}

namespace {

// Connected components of the subgraph induced on `alive`.
int component_count(const Graph& g, const BitVec& alive) {
    BitVec todo = alive;
    BitVec frontier(g.n());
    int comps = 0;
    while (true) {
        int start = todo.lowest();
        if (start < 0) break;
        ++comps;
        frontier.reset();
        frontier.set(start);
        todo.clear(start);
        while (frontier.any()) {
            BitVec next(g.n());
            for (int v : frontier.to_indices()) {
                BitVec reach = g.neighbors(v);
                reach &= todo;
                next |= reach;
                todo.subtract(reach);
            }
            frontier = std::move(next);
        }
    }
    return comps;
}

// Unordered echelon accumulator over a fixed small word width, tuned for the
// kappa inner loop: flat storage, pivot lookup table, no back-reduction.
class RankAccumulator {
public:
    RankAccumulator(int width_bits, int max_rows)
        : nwords_((width_bits + 63) / 64),
          rows_(static_cast<size_t>(max_rows) * nwords_),
          pivot_row_(static_cast<size_t>(width_bits), -1),
          rank_(0) {}

    void reset() {
        std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
        rank_ = 0;
    }

    int rank() const { return rank_; }

    // Reduce and insert the vector in buf (nwords words); buf is clobbered.
    // Returns true if the rank grew.
    bool insert(uint64_t* buf) {
        while (true) {
            int pivot = -1;
            for (size_t w = 0; w < nwords_; ++w) {
                if (buf[w]) {
                    pivot = static_cast<int>(w * 64) + __builtin_ctzll(buf[w]);
                    break;
                }
            }
            if (pivot < 0) return false;
            int r = pivot_row_[static_cast<size_t>(pivot)];
            if (r < 0) {
                uint64_t* dst = rows_.data() + static_cast<size_t>(rank_) * nwords_;
                std::copy(buf, buf + nwords_, dst);
                pivot_row_[static_cast<size_t>(pivot)] = rank_;
                ++rank_;
                return true;
            }
            const uint64_t* row = rows_.data() + static_cast<size_t>(r) * nwords_;
            for (size_t w = 0; w < nwords_; ++w) buf[w] ^= row[w];
        }
    }

private:
    size_t nwords_;
    std::vector<uint64_t> rows_;
    std::vector<int> pivot_row_;
    int rank_;
};

// Tests b~_i(Cl(g - C)) across many deletion sets C without rebuilding the
// complex.  For i = 1 the graph's edges and triangles are tabulated once and
// the rank of the triangle boundary is accumulated with an early stop at the
// cycle-space dimension.  On graphs with n <= 64 a sound certificate screens
// out most deletion sets before any elimination runs; see betti1_word.
class InducedBettiTester {
public:
    InducedBettiTester(const Graph& g, int i, const SearchCaps& caps)
        : g_(g), i_(i), caps_(caps), word_mode_(false) {
        if (i_ != 1) return;
        const int n = g.n();
        edge_id_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
        for (auto [u, v] : g.edges()) {
            int id = static_cast<int>(edges_.size());
            edge_id_[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = id;
            edge_id_[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = id;
            edges_.push_back({u, v});
        }
        BitVec common(n);
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
            auto [u, v] = edges_[static_cast<size_t>(id)];
            common = g.neighbors(u) & g.neighbors(v);
            for (int w : common.to_indices()) {
                if (w <= v) continue;
                tris_.push_back({u, v, w, id, eid(u, w), eid(v, w)});
                if (static_cast<long long>(tris_.size()) > caps_.max_faces)
                    throw resource_error("kappa: triangle enumeration exceeds face cap");
            }
        }
        acc_ = std::make_unique<RankAccumulator>(static_cast<int>(edges_.size()),
                                                 static_cast<int>(edges_.size()));
        scratch_.assign((edges_.size() + 63) / 64, 0);
        if (n <= 64) build_word_tables();
    }

    // Exact b~_i of Cl(g - c); early-stopped internally but any returned
    // value is exact.
    int betti(const BitVec& c) {
        switch (i_) {
            case 0: {
                BitVec alive = complement(c);
                if (alive.none()) return 0;
                return component_count(g_, alive) - 1;
            }
            case 1:
                return word_mode_ ? betti1_word(c.words()[0]) : betti1(c);
            default: {
                Graph h = delete_vertices(g_, c);
                SimplicialComplex x = build_clique_complex(h, i_ + 1, caps_.max_faces);
                return reduced_betti(x, i_);
            }
        }
    }

    // Sound fast screen: true guarantees H~_1(Cl(g - c)) = 0.  Three checks
    // over precomputed structures:
    //   (a) at most one surviving non-adjacent pair has an empty surviving
    //       common neighborhood ("far pair"),
    //   (b) the surviving common neighborhood of every surviving
    //       non-adjacent pair induces a connected graph,
    //   (c) every surviving chordless pentagon keeps a helper vertex.
    // Under (a)-(c) every graph cycle class dies: chords and (b)-paths of
    // triangle flips kill 4-cycles, helpers reduce chordless pentagons to
    // 4-cycles, and any chordless cycle of length >= 6 splits through a
    // near-antipodal pair (at most one of its three-plus candidate pairs can
    // be far) into two shorter cycles.
    bool certified_trivial(uint64_t cmask) const {
        uint64_t alive = all_mask_ & ~cmask;
        int far = 0;
        for (const WPair& p : wpairs_) {
            if (p.pair_mask & cmask) continue;
            uint64_t live = p.link & alive;
            if (!live) {
                if (++far >= 2) return false;
                continue;
            }
            uint64_t comp = live & (~live + 1);
            uint64_t frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t f = frontier; f;) {
                    int v = __builtin_ctzll(f);
                    f &= f - 1;
                    next |= adj_word_[static_cast<size_t>(v)];
                }
                next &= live & ~comp;
                comp |= next;
                frontier = next;
            }
            if (comp != live) return false;
        }
        for (const WPent& p : wpents_) {
            if (p.vmask & cmask) continue;
            if (!(p.helpers & alive)) return false;
        }
        return true;
    }

    bool has_word_certificate() const { return word_mode_; }

private:
    BitVec complement(const BitVec& c) const {
        BitVec alive(g_.n());
        alive.fill_all();
        alive.subtract(c);
        return alive;
    }

    int eid(int u, int v) const {
        return edge_id_[static_cast<size_t>(u) * static_cast<size_t>(g_.n()) +
                        static_cast<size_t>(v)];
    }

    void build_word_tables() {
        const int n = g_.n();
        all_mask_ = n == 64 ? ~0ULL : (1ULL << n) - 1;
        adj_word_.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) adj_word_[static_cast<size_t>(v)] = g_.neighbors(v).words()[0];

        edge_both_.reserve(edges_.size());
        for (const auto& e : edges_)
            edge_both_.push_back((1ULL << e.u) | (1ULL << e.v));
        tri_mask_.reserve(tris_.size());
        for (const auto& t : tris_)
            tri_mask_.push_back((1ULL << t.u) | (1ULL << t.v) | (1ULL << t.w));

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g_.has_edge(u, v))
                    wpairs_.push_back({(1ULL << u) | (1ULL << v),
                                       adj_word_[static_cast<size_t>(u)] &
                                           adj_word_[static_cast<size_t>(v)]});

        // Chordless pentagons: a 2-regular induced subgraph on 5 vertices is
        // exactly a 5-cycle.  Helpers per diagonal rotation: a vertex
        // adjacent to both diagonal ends and to one of the two far corners.
        std::vector<int> vs(5);
        for_each_subset_colex(n, 5, [&](const std::vector<int>& idx) {
            uint64_t sub = 0;
            for (int v : idx) sub |= 1ULL << v;
            for (int v : idx)
                if (__builtin_popcountll(adj_word_[static_cast<size_t>(v)] & sub) != 2)
                    return false;
            // Walk the cycle order.
            vs[0] = idx[0];
            uint64_t left = sub & ~(1ULL << vs[0]);
            for (int j = 1; j < 5; ++j) {
                uint64_t next = adj_word_[static_cast<size_t>(vs[j - 1])] & left;
                vs[j] = __builtin_ctzll(next);
                left &= ~(1ULL << vs[j]);
            }
            uint64_t helpers = 0;
            for (int r = 0; r < 5; ++r) {
                int a = vs[static_cast<size_t>(r)];
                int b = vs[static_cast<size_t>((r + 2) % 5)];
                int c1 = vs[static_cast<size_t>((r + 3) % 5)];
                int c2 = vs[static_cast<size_t>((r + 4) % 5)];
                helpers |= adj_word_[static_cast<size_t>(a)] & adj_word_[static_cast<size_t>(b)] &
                           (adj_word_[static_cast<size_t>(c1)] | adj_word_[static_cast<size_t>(c2)]);
            }
            wpents_.push_back({sub, helpers & ~sub});
            return false;
        });
        word_mode_ = true;
    }

    int betti1_word(uint64_t cmask) {
        if (certified_trivial(cmask)) return 0;
        uint64_t alive = all_mask_ & ~cmask;
        if (!alive) return 0;
        int alive_v = __builtin_popcountll(alive);
        int alive_e = 0;
        for (uint64_t both : edge_both_)
            if ((both & cmask) == 0) ++alive_e;
        // Components by word BFS.
        int comps = 0;
        uint64_t todo = alive;
        while (todo) {
            ++comps;
            uint64_t comp = todo & (~todo + 1);
            uint64_t frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t f = frontier; f;) {
                    int v = __builtin_ctzll(f);
                    f &= f - 1;
                    next |= adj_word_[static_cast<size_t>(v)];
                }
                next &= todo & ~comp;
                comp |= next;
                frontier = next;
            }
            todo &= ~comp;
        }
        int target = alive_e - alive_v + comps;  // dim Z_1
        if (target == 0) return 0;
        acc_->reset();
        for (size_t ti = 0; ti < tris_.size(); ++ti) {
            if (tri_mask_[ti] & cmask) continue;
            const Tri& t = tris_[ti];
            std::fill(scratch_.begin(), scratch_.end(), 0);
            scratch_[static_cast<size_t>(t.e0) >> 6] |= 1ULL << (t.e0 & 63);
            scratch_[static_cast<size_t>(t.e1) >> 6] |= 1ULL << (t.e1 & 63);
            scratch_[static_cast<size_t>(t.e2) >> 6] |= 1ULL << (t.e2 & 63);
            acc_->insert(scratch_.data());
            if (acc_->rank() == target) return 0;
        }
        return target - acc_->rank();
    }

    int betti1(const BitVec& c) {
        BitVec alive = complement(c);
        if (alive.none()) return 0;
        int alive_v = alive.count();
        int alive_e = 0;
        for (const auto& e : edges_)
            if (alive.get(e.u) && alive.get(e.v)) ++alive_e;
        int comps = component_count(g_, alive);
        int target = alive_e - alive_v + comps;  // dim Z_1
        if (target == 0) return 0;
        acc_->reset();
        for (const auto& t : tris_) {
            if (!(alive.get(t.u) && alive.get(t.v) && alive.get(t.w))) continue;
            std::fill(scratch_.begin(), scratch_.end(), 0);
            scratch_[static_cast<size_t>(t.e0) >> 6] |= 1ULL << (t.e0 & 63);
            scratch_[static_cast<size_t>(t.e1) >> 6] |= 1ULL << (t.e1 & 63);
            scratch_[static_cast<size_t>(t.e2) >> 6] |= 1ULL << (t.e2 & 63);
            acc_->insert(scratch_.data());
            if (acc_->rank() == target) return 0;
        }
        return target - acc_->rank();
    }

    struct Edge {
        int u, v;
    };
    struct Tri {
        int u, v, w, e0, e1, e2;
    };
    struct WPair {
        uint64_t pair_mask, link;
    };
    struct WPent {
        uint64_t vmask, helpers;
    };

    const Graph& g_;
    int i_;
    SearchCaps caps_;
    std::vector<int> edge_id_;
    std::vector<Edge> edges_;
    std::vector<Tri> tris_;
    std::unique_ptr<RankAccumulator> acc_;
    std::vector<uint64_t> scratch_;

    bool word_mode_;
    uint64_t all_mask_ = 0;
    std::vector<uint64_t> adj_word_;
    std::vector<uint64_t> edge_both_;
    std::vector<uint64_t> tri_mask_;
    std::vector<WPair> wpairs_;
    std::vector<WPent> wpents_;
};

}  // namespace

namespace detail {

bool h1_certified_trivial(const Graph& g, const VertexSet& c) {
    SearchCaps caps;
    InducedBettiTester tester(g, 1, caps);
    if (!tester.has_word_certificate()) return false;
    return tester.certified_trivial(c.words()[0]);
}

}  // namespace detail

KappaResult kappa(const Graph& g, int i, int size_cap, const SearchCaps& caps) {
    if (i < 0) throw validation_error("kappa: i must be >= 0");
    if (size_cap < 0 || size_cap > g.n()) throw validation_error("kappa: size_cap out of range");
    InducedBettiTester tester(g, i, caps);
    BitVec c(g.n());
    for (int size = 0; size <= size_cap; ++size) {
        if (binom_capped(g.n(), size) > caps.max_subsets)
            throw resource_error("kappa: size class " + std::to_string(size) + " exceeds cap",
                                 size);
        KappaResult found{KappaResult::Kind::unknown_at_least, 0, std::nullopt, std::nullopt};
        bool hit = false;
        for_each_subset_colex(g.n(), size, [&](const std::vector<int>& idx) {
            c.reset();
            for (int v : idx) c.set(v);
            int b = tester.betti(c);
            if (b > 0) {
                found = {KappaResult::Kind::value, size, c, b};
                hit = true;
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    if (size_cap == g.n())
        return {KappaResult::Kind::infinite, 0, std::nullopt, std::nullopt};
    return {KappaResult::Kind::unknown_at_least, size_cap + 1, std::nullopt, std::nullopt};
}

namespace {

// Unit-capacity max flow (BFS augmentation) on the vertex-split digraph;
// early exit once the flow reaches `limit`.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : n_(g.n()) {
        head_.assign(static_cast<size_t>(2 * n_), -1);
        for (int v = 0; v < n_; ++v) add_arc(vin(v), vout(v));
        for (auto [u, v] : g.edges()) {
            add_arc(vout(u), vin(v));
            add_arc(vout(v), vin(u));
        }
    }

    static int vin(int v) { return 2 * v; }
    static int vout(int v) { return 2 * v + 1; }

    int max_flow(int s, int t, int limit) {
        for (size_t a = 0; a < cap_.size(); a += 2) {
            cap_[a] = 1;
            cap_[a + 1] = 0;
        }
        int flow = 0;
        std::vector<int> prev_arc(static_cast<size_t>(2 * n_));
        while (flow < limit) {
            std::fill(prev_arc.begin(), prev_arc.end(), -1);
            std::deque<int> queue{s};
            prev_arc[static_cast<size_t>(s)] = -2;
            bool reached = false;
            while (!queue.empty() && !reached) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<size_t>(x)]; a >= 0; a = next_[static_cast<size_t>(a)]) {
                    int y = to_[static_cast<size_t>(a)];
                    if (cap_[static_cast<size_t>(a)] > 0 && prev_arc[static_cast<size_t>(y)] == -1) {
                        prev_arc[static_cast<size_t>(y)] = a;
                        if (y == t) {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if (!reached) break;
            for (int y = t; y != s;) {
                int a = prev_arc[static_cast<size_t>(y)];
                cap_[static_cast<size_t>(a)] -= 1;
                cap_[static_cast<size_t>(a ^ 1)] += 1;
                y = to_[static_cast<size_t>(a ^ 1)];
            }
            ++flow;
        }
        return flow;
    }

private:
    void add_arc(int from, int to) {
        to_.push_back(to);
        next_.push_back(head_[static_cast<size_t>(from)]);
        head_[static_cast<size_t>(from)] = static_cast<int>(to_.size()) - 1;
        cap_.push_back(1);
        // Residual arc.
        to_.push_back(from);
        next_.push_back(head_[static_cast<size_t>(to)]);
        head_[static_cast<size_t>(to)] = static_cast<int>(to_.size()) - 1;
        cap_.push_back(0);
    }

    int n_;
    std::vector<int> head_, next_, to_, cap_;
};

}  // namespace

ExtInt vertex_connectivity(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return ExtInt::infinity();
    SplitFlow flow(g);
    long long best = -1;
    for (int u = 0; u < n && best != 0; ++u) {
        for (int v = u + 1; v < n && best != 0; ++v) {
            if (g.has_edge(u, v)) continue;
            int limit = best < 0 ? n : static_cast<int>(best);
            int f = flow.max_flow(SplitFlow::vout(u), SplitFlow::vin(v), limit);
            if (best < 0 || f < best) best = f;
        }
    }
    if (best < 0) return ExtInt::infinity();  // complete graph
    return ExtInt(best);
}

std::optional<std::vector<int>> cross_polytope_witness(const Graph& g, const Face& a) {
    for (size_t j = 0; j + 1 < a.size(); ++j)
        if (a[j] >= a[j + 1]) throw validation_error("cross_polytope_witness: face not increasing");
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = j + 1; k < a.size(); ++k)
            if (!g.has_edge(a[j], a[k]))
                throw validation_error("cross_polytope_witness: A is not a clique");

    const int m = static_cast<int>(a.size());  // i + 1
    std::vector<int> b;
    for (int j = 0; j < m; ++j) {
        BitVec cand(g.n());
        cand.fill_all();
        for (int k = 0; k < m; ++k)
            if (k != j) cand &= g.neighbors(a[static_cast<size_t>(k)]);
        for (int prev : b) cand &= g.neighbors(prev);
        cand.subtract(g.neighbors(a[static_cast<size_t>(j)]));
        cand.clear(a[static_cast<size_t>(j)]);
        int pick = cand.lowest();
        if (pick < 0) return std::nullopt;
        b.push_back(pick);
    }

    // Structural verification: on A u B every pair is adjacent except the
    // pairs (a_j, b_j).
    std::vector<int> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    for (int x = 0; x < 2 * m; ++x) {
        for (int y = x + 1; y < 2 * m; ++y) {
            bool antipodal = (y == x + m);
            bool adjacent = g.has_edge(all[static_cast<size_t>(x)], all[static_cast<size_t>(y)]);
            if (adjacent == antipodal) return std::nullopt;
        }
    }
    return b;
}

bool edge_is_isthmus(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw validation_error("edge_is_isthmus: not an edge");
    // Reachability from u to v without the edge uv.
    BitVec seen(g.n());
    seen.set(u);
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x).to_indices()) {
            if ((x == u && y == v) || (x == v && y == u)) continue;
            if (seen.get(y)) continue;
            if (y == v) return false;
            seen.set(y);
            queue.push_back(y);
        }
    }
    return true;
}

}  // namespace homcon
