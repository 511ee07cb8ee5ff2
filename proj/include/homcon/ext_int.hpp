#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace homcon {

// Nonnegative integer extended with +infinity ("minimum over the empty set").
// Infinity is a distinguished state, never a sentinel integer.
class ExtInt {
public:
    constexpr ExtInt() : val_(0), inf_(false) {}
    constexpr ExtInt(long long v) : val_(v), inf_(false) {}
    static constexpr ExtInt infinity() {
        ExtInt e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr long long value() const { return val_; }  // only valid when finite

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.val_ == b.val_;
    }
    friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }
    friend constexpr bool operator<(ExtInt a, ExtInt b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.val_ < b.val_;
    }
    friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
    friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

    // Comparison against a finite real threshold (for the delicate-condition
    // inequalities): infinity exceeds every threshold.
    constexpr bool at_least(double threshold) const {
        return inf_ || static_cast<double>(val_) >= threshold;
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(val_); }

    friend std::ostream& operator<<(std::ostream& os, ExtInt e) { return os << e.str(); }

private:
    long long val_;
    bool inf_;
};

}  // namespace homcon
