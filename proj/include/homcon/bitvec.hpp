#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "homcon/kernels.hpp"

namespace homcon {

// Fixed-width packed bit vector over GF(2).  Trailing bits of the last word
// are kept zero; every mutator reestablishes that.
class BitVec {
public:
    BitVec() : width_(0) {}
    explicit BitVec(int width) : width_(width), w_((width + 63) / 64, 0) {}

    int width() const { return width_; }
    size_t nwords() const { return w_.size(); }
    uint64_t* words() { return w_.data(); }
    const uint64_t* words() const { return w_.data(); }

    bool get(int i) const {
        assert(i >= 0 && i < width_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL;
    }
    void set(int i) {
        assert(i >= 0 && i < width_);
        w_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63);
    }
    void clear(int i) {
        assert(i >= 0 && i < width_);
        w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63));
    }
    void flip(int i) {
        assert(i >= 0 && i < width_);
        w_[static_cast<size_t>(i) >> 6] ^= 1ULL << (i & 63);
    }

    void reset() { std::fill(w_.begin(), w_.end(), 0); }
    void fill_all() {
        std::fill(w_.begin(), w_.end(), ~0ULL);
        mask_tail();
    }

    int count() const { return static_cast<int>(kern::popcount(w_.data(), w_.size())); }
    bool none() const { return kern::is_zero(w_.data(), w_.size()); }
    bool any() const { return !none(); }

    void operator^=(const BitVec& o) {
        assert(width_ == o.width_);
        kern::xor_inplace(w_.data(), o.w_.data(), w_.size());
    }
    void operator&=(const BitVec& o) {
        assert(width_ == o.width_);
        kern::and_into(w_.data(), w_.data(), o.w_.data(), w_.size());
    }
    void operator|=(const BitVec& o) {
        assert(width_ == o.width_);
        kern::or_inplace(w_.data(), o.w_.data(), w_.size());
    }

    // this & ~o
    void subtract(const BitVec& o) {
        assert(width_ == o.width_);
        kern::andnot_into(w_.data(), w_.data(), o.w_.data(), w_.size());
    }

    bool intersects(const BitVec& o) const {
        assert(width_ == o.width_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const BitVec& o) const {
        assert(width_ == o.width_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    int and_count(const BitVec& o) const {
        assert(width_ == o.width_);
        return static_cast<int>(kern::and_popcount(w_.data(), o.w_.data(), w_.size()));
    }

    // Index of the lowest set bit, or -1.
    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + static_cast<size_t>(__builtin_ctzll(w_[i])));
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + static_cast<size_t>(__builtin_ctzll(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.width_ == b.width_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    // Lexicographic on word content; gives a canonical order for witnesses.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        assert(a.width_ == b.width_);
        for (size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

private:
    void mask_tail() {
        if (width_ & 63) w_.back() &= (~0ULL) >> (64 - (width_ & 63));
    }

    int width_;
    std::vector<uint64_t> w_;
};

inline BitVec operator&(BitVec a, const BitVec& b) {
    a &= b;
    return a;
}
inline BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
}

}  // namespace homcon
