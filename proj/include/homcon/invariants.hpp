#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "homcon/caps.hpp"
#include "homcon/complex.hpp"
#include "homcon/ext_int.hpp"
#include "homcon/graph.hpp"
#include "homcon/homology.hpp"

namespace homcon {

// delta^i: minimum over (i+1)-cliques I of |common_neighbors(I)|; infinity
// when no (i+1)-clique exists.
ExtInt delta(const Graph& g, int i, const SearchCaps& caps = {});

struct KappaResult {
    enum class Kind { value, infinite, unknown_at_least };
    Kind kind;
    long long value = 0;  // kappa when kind==value; lower bound when unknown_at_least
    std::optional<VertexSet> witness_c;  // internal indices of g
    std::optional<int> witness_dim_h;

    bool decided() const { return kind != Kind::unknown_at_least; }
    ExtInt as_ext() const {
        return kind == Kind::infinite ? ExtInt::infinity() : ExtInt(value);
    }
};

// kappa^i: deletion sets C are searched in colex order within each size
// class 0..size_cap with early exit at the first witness.  Exhausting every
// C subseteq V (size_cap = n) proves infinity; stopping at a smaller cap
// yields unknown_at_least(cap+1).  A size class whose binom(n,c) exceeds
// caps.max_subsets raises resource_error instead of guessing.
KappaResult kappa(const Graph& g, int i, int size_cap, const SearchCaps& caps = {});

// Classical vertex connectivity by Menger's theorem (unit-capacity max-flow
// over the vertex-split digraph); infinity for complete graphs.  Agrees with
// kappa at i = 0 and stays polynomial, which the Monte Carlo harness needs
// at n = 40; the subset-search kappa above is the independent route the
// tests compare against.
ExtInt vertex_connectivity(const Graph& g);

// Greedy cross-polytope witness from an (i+1)-clique A: picks b_j as the
// lowest-index vertex adjacent to everything in (A - {a_j}) and the previous
// b's but not to a_j.  Success returns the b's after verifying the full
// octahedral pairing structurally; failure (empty candidate set at some
// step) does not imply no witness exists.
std::optional<std::vector<int>> cross_polytope_witness(const Graph& g, const Face& a);

bool edge_is_isthmus(const Graph& g, int u, int v);

enum class DisjointnessMode { support, vertex };

struct AdaptedResult {
    ExtInt value;
    bool partial = false;  // a candidate cap turned the exact max into a lower bound
};

// k^i_ell of a complex: min over nonzero classes gamma of the maximum size
// of a family of pairwise disjoint i-cycles with support <= ell, each
// pairing to 1 with gamma.  Infinity when H~^i = 0.
AdaptedResult k_adapted_complex(const SimplicialComplex& x, int i, int ell,
                                const SearchCaps& caps,
                                DisjointnessMode mode = DisjointnessMode::support);

// k^i_ell of a graph: min over C with |C| < delta^i(g) of the complex value
// on Cl(g - C); infinity over the empty range.
AdaptedResult k_adapted_graph(const Graph& g, int i, int ell, const SearchCaps& caps,
                              DisjointnessMode mode = DisjointnessMode::support);

// Condition (S): no vertex of g has all its neighbors inside c, E defines a
// nonzero class of H^1(Cl(g-c)), and |E| is minimal in that class.  E is a
// bit vector over the lex-sorted edge list of g-c.
bool satisfies_S(const Graph& g, const VertexSet& c, const BitVec& e, const SearchCaps& caps);

struct TrichotomyViolations {
    std::vector<std::array<int, 3>> bad_triangles;     // original labels
    std::vector<std::pair<int, int>> uncovered_edges;  // original labels
    bool empty() const { return bad_triangles.empty() && uncovered_edges.empty(); }
};

// Scans the triangles of g-c: allowed E-edge counts are 0 and 2 (a triangle
// with 1 or 3 E-edges shows up in the coboundary).  When |c| < delta^1(g),
// also reports edges of g-c lying in no triangle of g-c.
TrichotomyViolations triangle_trichotomy_check(const Graph& g, const VertexSet& c,
                                               const BitVec& e, const SearchCaps& caps);

struct FResult {
    ExtInt value;
    bool partial = false;  // search truncated at c_size_cap < n
};

// f(g) = min over (S)-pairs (C, E) with |C| <= c_size_cap of the maximum
// E-degree over surviving vertices.  All minimal-support representatives of
// every class are visited, not just one.
FResult f_invariant(const Graph& g, int c_size_cap, const SearchCaps& caps);

// tau(g): minimum |D| such that g-D has at least two unordered vertex pairs
// at distance > 2 (disconnected pairs count); infinity if no D works.
ExtInt tau(const Graph& g, const SearchCaps& caps);

struct DelicateRecord {
    bool size_ok;
    bool h_norm_ok;
    bool dominated_vertex_exists;
    bool c_norm_ok;
    bool star_ok;  // h_norm_ok and (dominated or c_norm_ok); meaningful when size_ok
};

// Clause-by-clause evaluation of condition (*) for one deletion set C.
DelicateRecord delicate_check(const Graph& g, int i, const VertexSet& c, double eps,
                              int ell_i, double r_i, double p, const SearchCaps& caps);

struct PairTrichotomyRecord {
    bool case_i_holds = false;
    bool case_ii_holds = false;
    bool case_iii_holds = false;
    std::optional<std::vector<int>> witness_a;  // original labels
    std::optional<std::vector<int>> witness_b;
    ExtInt delta_value;
    ExtInt kappa_value;
    ExtInt k_ell_value;
};

// Evaluates the three clauses of the deterministic trichotomy exactly:
// (i) some A with 1 <= |A| <= ell has 2*ell*delta >= |N(A)| * k^i_ell(g);
// (ii) some disjoint A, B with |B| = |A| <= ell have
//      delta * |N(A u B)| >= |N(A)|^2;
// (iii) kappa^i >= delta^i (extended-real comparison).
PairTrichotomyRecord pair_trichotomy_check(const Graph& g, int i, int ell,
                                           const SearchCaps& caps);

namespace detail {
// Exposed for tests: the screening certificate used inside kappa's i = 1
// inner loop.  Sound by construction (true implies H~_1(Cl(g-c)) = 0), and
// the equivalence tests enforce exactly that against the exact rank path.
// Only graphs with n <= 64 carry the certificate; others return false.
bool h1_certified_trivial(const Graph& g, const VertexSet& c);
}  // namespace detail

}  // namespace homcon
