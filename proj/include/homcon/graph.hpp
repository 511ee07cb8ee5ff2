#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "homcon/bitvec.hpp"

namespace homcon {

using VertexSet = BitVec;

// Labeled simple graph over dense bit-row adjacency.  Vertices are indexed
// 0..n-1 internally; labels carry the identifiers of the graph this one was
// derived from, so witnesses stay reportable in input coordinates.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);
    Graph(int n, std::vector<int> labels);

    int n() const { return n_; }
    const std::vector<int>& labels() const { return labels_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].get(v); }
    void add_edge(int u, int v);
    const BitVec& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    // Adjacency invariants: symmetric, zero diagonal.  Cheap enough to run
    // after every construction path; throws on violation.
    void check_invariants() const;

private:
    int n_;
    std::vector<int> labels_;
    std::vector<BitVec> adj_;
};

// Erdos-Renyi sample: each of the n(n-1)/2 edges present independently with
// probability p.  Pairs are visited in lexicographic (u,v) order with one
// SplitMix64 draw each, so a (n, p, seed) triple is a bit-exact contract.
Graph er_sample(int n, double p, uint64_t seed);

// Common neighbors of S: intersection of N(s) over s in S; all of V for
// S empty (the empty intersection), which the cross-polytope recursion needs.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

// Induced subgraph on V minus C, original labels preserved.
Graph delete_vertices(const Graph& g, const VertexSet& c);

// (min, max) of |N(A)| over all vertex subsets A of size k, exact.
// Throws resource_error if binom(n, k) exceeds max_subsets.
std::pair<long long, long long> neighborhood_size_range(const Graph& g, int k,
                                                        long long max_subsets);

// Minimum over disjoint A, B with |A| = a, |B| = b of the number of graph
// edges between A and B.  Exact sizes only: enlarging either set cannot
// decrease the count, so this equals the min over |A| >= a, |B| >= b.
long long min_interconnection(const Graph& g, int a, int b, long long max_subsets);

// Sampled upper bound on min_interconnection for sizes past the cap: draws
// `samples` random disjoint (A, B) pairs and reports the best seen.
long long min_interconnection_sampled(const Graph& g, int a, int b, long long samples,
                                      uint64_t seed);

// Decaying edge-probability schedule p_n = min(1, c * n^-alpha).
struct Schedule {
    double alpha = 0.0;  // > 0
    double c = 1.0;      // > 0

    double eval(long long n) const;
    // Middling of exponent w: alpha < 1/w (alpha > 0 gives p_n -> 0).
    bool is_middling(double w) const { return alpha > 0.0 && alpha < 1.0 / w; }
};

// Edge-list text format: "n m" then m lines "u v", 0-based labels.
// Rejects loops, duplicate edges, and out-of-range endpoints.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Small fixture builders used across tests and docs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph octahedron();  // K_{2,2,2}

}  // namespace homcon
