#pragma once

#include <optional>
#include <vector>

#include "homcon/bitvec.hpp"

namespace homcon {

// Dense GF(2) matrix, rows packed as BitVecs.  Immutable after construction
// in practice; elimination works on copies or on an EchelonBasis.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0) {}
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BitVec& row(int r) { return data_[static_cast<size_t>(r)]; }
    const BitVec& row(int r) const { return data_[static_cast<size_t>(r)]; }

    bool get(int r, int c) const { return data_[static_cast<size_t>(r)].get(c); }
    void set(int r, int c) { data_[static_cast<size_t>(r)].set(c); }

    BitMatrix transposed() const;

    // M * v over GF(2); v indexed by columns, result by rows.
    BitVec apply(const BitVec& v) const;

private:
    int rows_, cols_;
    std::vector<BitVec> data_;
};

// Incremental row-echelon basis: the workhorse for rank, span membership and
// quotient-space bookkeeping.  Vectors are reduced against stored pivot rows;
// the structure stays in echelon form (one pivot column per stored row).
class EchelonBasis {
public:
    explicit EchelonBasis(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the basis; returns the residual.
    BitVec reduce(BitVec v) const;

    // Insert v if independent.  Returns true if the rank grew.
    bool insert(BitVec v);

    bool contains(const BitVec& v) const { return reduce(v).none(); }

private:
    int width_;
    std::vector<BitVec> rows_;   // echelon rows
    std::vector<int> pivots_;    // pivot column of each row (ascending)
};

int rank(const BitMatrix& m);

// Basis of { v : M v = 0 }.  Count always equals cols - rank.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

bool in_span(const std::vector<BitVec>& basis, const BitVec& v);

}  // namespace homcon
