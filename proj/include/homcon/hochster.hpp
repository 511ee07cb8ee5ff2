#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "homcon/caps.hpp"
#include "homcon/complex.hpp"
#include "homcon/ext_int.hpp"
#include "homcon/graph.hpp"
#include "homcon/invariants.hpp"

namespace homcon {

// Graded Betti table of the Stanley-Reisner ring, entries keyed by
// (homological degree i, internal degree l); only nonzero entries stored.
// beta_{0,0} = 1 always; beta_{i,l} = 0 for l <= i otherwise.
struct BettiTable {
    int n = 0;  // ambient variable/vertex count
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int l) const {
        auto it = entries.find({i, l});
        return it == entries.end() ? 0 : it->second;
    }
    std::string to_csv() const;     // rows: i, j, i+j, beta
    std::string to_grid() const;    // pretty text grid (strands as rows)
};

// Exact evaluation of the Hochster sum over all 2^n vertex subsets W,
// coefficients over F2.  W = empty contributes beta_{0,0} = 1 through the
// reduced cohomology of the void complex.  Cone subcomplexes are skipped
// after a cheap scan since every reduced Betti number of a cone vanishes.
BettiTable betti_table(const SimplicialComplex& x, int n, int n_cap = 16);

// Strand i is the row {beta_{j, i+j}}_j; its length is the largest j with a
// nonzero entry, or nullopt for an empty strand (serialized as "inf").
std::optional<int> strand_length(const BettiTable& b, int i);

int projective_dimension(const BettiTable& b);

struct StrandKappaRecord {
    std::optional<int> lambda;  // strand length, nullopt = empty strand
    ExtInt kappa_prev;          // kappa^{i-1}
    long long n;
    int i;
    bool consistent;
};

// Dual-pipeline check of the strand-length identity: the Betti-table side
// computes lambda^i, the search side computes kappa^{i-1}, and the record
// reports whether lambda^i = n - i - kappa^{i-1}, with an empty strand
// matching an infinite kappa.  (Hochster turns max{|W| : H~^{i-1}(Cl(G|_W))
// nonzero} into both quantities, which fixes the offset term.)
StrandKappaRecord strand_kappa_identity_check(const Graph& g, int i, const SearchCaps& caps);

// Named re-exports of the section-2 identifications of the module norms.
ExtInt module_norm_upper(const Graph& g, int i, const SearchCaps& caps);
ExtInt module_norm_lower(const Graph& g, int i, const SearchCaps& caps);

// Degree-2 generators of the Stanley-Reisner ideal of a flag complex: the
// non-edges, sorted.
std::vector<std::pair<int, int>> nonface_generators(const Graph& g);

}  // namespace homcon
