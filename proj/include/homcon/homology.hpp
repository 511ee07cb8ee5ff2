#pragma once

#include <vector>

#include "homcon/caps.hpp"
#include "homcon/complex.hpp"
#include "homcon/ext_int.hpp"

namespace homcon {

// Reduced Betti number over F2 (dim of reduced (co)homology; equal over a
// field).  Conventions: the void complex has H~^{-1} = 1 and nothing else;
// a nonempty complex has H~^{-1} = 0.  Throws validation_error if the
// complex was not built deep enough to answer (dimension i+1 required).
int reduced_betti(const SimplicialComplex& x, int i);

// All reduced Betti numbers b_{-1}..b_top in one pass (shared rank work).
std::vector<int> all_reduced_betti(const SimplicialComplex& x);

// Evaluation pairing <chi, zeta> = parity of the common support.
int pairing(const BitVec& chi, const BitVec& zeta);

struct CochainClassInfo {
    int dimension;
    BitVec representative;  // a cocycle over the i-faces
    bool is_nontrivial;
};

// One representative per nonzero class of H~^i; errors if 2^dim - 1 exceeds
// caps.max_classes.
std::vector<CochainClassInfo> class_representatives(const SimplicialComplex& x, int i,
                                                    const SearchCaps& caps);

// Minimum support size of an i-cocycle with nonzero class; infinity iff
// H~^i = 0.  Supports are enumerated by increasing size inside the union of
// the cocycle-space coordinates, so the first witness is the exact minimum.
// A cap hit raises resource_error carrying "norm >= s" as lower_bound.
ExtInt cocycle_norm(const SimplicialComplex& x, int i, const SearchCaps& caps);

// Decide cocycle_norm >= threshold without necessarily finding the norm:
// searches support sizes below threshold only.
bool cocycle_norm_at_least(const SimplicialComplex& x, int i, double threshold,
                           const SearchCaps& caps);

// Least L such that classes of i-cycles with support <= L span H~_i; 0 when
// H~_i = 0 (the empty spanning set).  Equivalent to the min over spanning
// sets of cycles of the maximum support.
ExtInt homology_norm(const SimplicialComplex& x, int i, const SearchCaps& caps);

// Decide homology_norm <= bound, searching no further than bound.
bool homology_norm_at_most(const SimplicialComplex& x, int i, long long bound,
                           const SearchCaps& caps);

}  // namespace homcon
