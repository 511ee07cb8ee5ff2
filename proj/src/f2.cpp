#include "homcon/f2.hpp"

#include <algorithm>

#include "homcon/errors.hpp"

namespace homcon {

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const BitVec& v = row(r);
        for (size_t wi = 0; wi < v.nwords(); ++wi) {
            uint64_t w = v.words()[wi];
            while (w) {
                int c = static_cast<int>(wi * 64) + __builtin_ctzll(w);
                t.set(c, r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVec BitMatrix::apply(const BitVec& v) const {
    BitVec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        if (row(r).and_count(v) & 1) out.set(r);
    }
    return out;
}

BitVec EchelonBasis::reduce(BitVec v) const {
    // Pivot columns are ascending, and reducing with row i can only set bits
    // in columns > pivots_[i], so one forward sweep fully reduces.
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) v ^= rows_[i];
    }
    return v;
}

bool EchelonBasis::insert(BitVec v) {
    v = reduce(std::move(v));
    int p = v.lowest();
    if (p < 0) return false;
    // Keep pivot order: insert before the first row with a larger pivot.
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t pos = static_cast<size_t>(it - pivots_.begin());
    // Back-reduce earlier rows that have a bit in column p.
    for (size_t i = 0; i < pos; ++i) {
        if (rows_[i].get(p)) rows_[i] ^= v;
    }
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    return true;
}

int rank(const BitMatrix& m) {
    EchelonBasis basis(m.cols());
    for (int r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.rank();
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // Row-reduce a working copy, tracking pivot columns.
    std::vector<BitVec> rref;
    std::vector<int> pivot_col;
    for (int r = 0; r < rows; ++r) {
        BitVec v = m.row(r);
        for (size_t i = 0; i < rref.size(); ++i)
            if (v.get(pivot_col[i])) v ^= rref[i];
        int p = v.lowest();
        if (p < 0) continue;
        for (size_t i = 0; i < rref.size(); ++i)
            if (rref[i].get(p)) rref[i] ^= v;
        rref.push_back(std::move(v));
        pivot_col.push_back(p);
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivot_col) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<BitVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        BitVec v(cols);
        v.set(c);
        for (size_t i = 0; i < rref.size(); ++i)
            if (rref[i].get(c)) v.set(pivot_col[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<BitVec>& basis, const BitVec& v) {
    if (!basis.empty() && basis.front().width() != v.width())
        throw validation_error("in_span: width mismatch");
    EchelonBasis e(v.width());
    for (const BitVec& b : basis) {
        if (b.width() != v.width()) throw validation_error("in_span: width mismatch");
        e.insert(b);
    }
    return e.contains(v);
}

}  // namespace homcon
