#include "homcon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "homcon/errors.hpp"
#include "homcon/rng.hpp"
#include "homcon/subsets.hpp"

namespace homcon {

Graph::Graph(int n) : n_(n), labels_(static_cast<size_t>(n)), adj_(static_cast<size_t>(n), BitVec(n)) {
    std::iota(labels_.begin(), labels_.end(), 0);
}

Graph::Graph(int n, std::vector<int> labels)
    : n_(n), labels_(std::move(labels)), adj_(static_cast<size_t>(n), BitVec(n)) {}

void Graph::add_edge(int u, int v) {
    if (u == v) throw validation_error("add_edge: loop");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)].to_indices())
            if (v > u) out.emplace_back(u, v);
    return out;
}

void Graph::check_invariants() const {
    std::set<int> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n_)
        throw validation_error("graph: duplicate labels");
    for (int u = 0; u < n_; ++u) {
        if (adj_[static_cast<size_t>(u)].get(u)) throw validation_error("graph: loop");
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v) != has_edge(v, u))
                throw validation_error("graph: asymmetric adjacency");
    }
}

Graph er_sample(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw validation_error("er_sample: p outside [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    g.check_invariants();
    return g;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    VertexSet out(g.n());
    out.fill_all();
    for (int v : s.to_indices()) out &= g.neighbors(v);
    return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& c) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!c.get(v)) keep.push_back(v);
    std::vector<int> labels;
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.labels()[static_cast<size_t>(v)]);
    Graph out(static_cast<int>(keep.size()), std::move(labels));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::pair<long long, long long> neighborhood_size_range(const Graph& g, int k,
                                                        long long max_subsets) {
    if (k < 1 || k > g.n()) throw validation_error("neighborhood_size_range: k out of range");
    long long total = binom_capped(g.n(), k);
    if (total > max_subsets)
        throw resource_error("neighborhood_size_range: binom(n,k) exceeds cap");
    long long lo = -1, hi = -1;
    BitVec acc(g.n());
    for_each_subset_colex(g.n(), k, [&](const std::vector<int>& idx) {
        acc.fill_all();
        for (int v : idx) acc &= g.neighbors(v);
        long long size = acc.count();
        if (lo < 0 || size < lo) lo = size;
        if (size > hi) hi = size;
        return false;
    });
    return {lo, hi};
}

long long min_interconnection(const Graph& g, int a, int b, long long max_subsets) {
    if (a < 1 || b < 1 || a + b > g.n())
        throw validation_error("min_interconnection: sizes out of range");
    long long total = binom_capped(g.n(), a);
    long long inner = binom_capped(g.n() - a, b);
    if (total > max_subsets / std::max(inner, 1LL))
        throw resource_error("min_interconnection: enumeration exceeds cap");
    long long best = -1;
    std::vector<int> bs;
    for_each_subset_colex(g.n(), a, [&](const std::vector<int>& aset) {
        std::vector<int> rest;
        for (int v = 0; v < g.n(); ++v)
            if (std::find(aset.begin(), aset.end(), v) == aset.end()) rest.push_back(v);
        for_each_subset_colex(static_cast<int>(rest.size()), b, [&](const std::vector<int>& bidx) {
            long long cross = 0;
            for (int i : bidx) {
                int v = rest[static_cast<size_t>(i)];
                for (int u : aset) cross += g.has_edge(u, v) ? 1 : 0;
            }
            if (best < 0 || cross < best) best = cross;
            return best == 0;
        });
        return best == 0;
    });
    return best;
}

long long min_interconnection_sampled(const Graph& g, int a, int b, long long samples,
                                      uint64_t seed) {
    if (a < 1 || b < 1 || a + b > g.n())
        throw validation_error("min_interconnection_sampled: sizes out of range");
    SplitMix64 rng(seed);
    long long best = -1;
    std::vector<int> perm(static_cast<size_t>(g.n()));
    for (long long s = 0; s < samples; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        // Fisher-Yates prefix of length a+b.
        for (int i = 0; i < a + b; ++i) {
            int j = i + static_cast<int>(rng.next() % static_cast<uint64_t>(g.n() - i));
            std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        }
        long long cross = 0;
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j)
                cross += g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? 1 : 0;
        if (best < 0 || cross < best) best = cross;
    }
    return best;
}

double Schedule::eval(long long n) const {
    if (n < 1) throw validation_error("schedule: n must be >= 1");
    return std::min(1.0, c * std::pow(static_cast<double>(n), -alpha));
}

Graph read_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw validation_error("edge list: missing header \"n m\"");
    if (n < 0 || m < 0) throw validation_error("edge list: negative header values");
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw validation_error("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw validation_error("edge list: endpoint out of range");
        if (u == v) throw validation_error("edge list: loop rejected");
        if (g.has_edge(u, v)) throw validation_error("edge list: duplicate edge rejected");
        g.add_edge(u, v);
    }
    g.check_invariants();
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.n() << " " << es.size() << "\n";
    for (auto [u, v] : es)
        out << g.labels()[static_cast<size_t>(u)] << " " << g.labels()[static_cast<size_t>(v)] << "\n";
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph octahedron() {
    // Antipodal pairs (0,1), (2,3), (4,5).
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if ((u >> 1) != (v >> 1)) g.add_edge(u, v);
    return g;
}

}  // namespace homcon
