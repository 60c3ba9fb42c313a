#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "z4wb/bitvec.hpp"

namespace z4wb {

// Vector over Z4, capacity 64 coordinates, stored as two bitplanes:
// entry i = p0 bit + 2 * p1 bit.
class Z4Vec {
public:
    Z4Vec() : p0_(0), p1_(0) {}

    static Z4Vec lift(const BitVec& b, int n) {  // {0,1}-entry lift
        Z4Vec v;
        for (int i = 0; i < n; ++i)
            if (b.get(i)) v.p0_ |= uint64_t{1} << i;
        return v;
    }

    int get(int i) const { return static_cast<int>(((p0_ >> i) & 1) | (((p1_ >> i) & 1) << 1)); }

    void set(int i, int val) {
        uint64_t m = uint64_t{1} << i;
        p0_ = (p0_ & ~m) | ((val & 1) ? m : 0);
        p1_ = (p1_ & ~m) | ((val & 2) ? m : 0);
    }

    bool is_zero() const { return (p0_ | p1_) == 0; }

    Z4Vec operator+(const Z4Vec& o) const {
        Z4Vec r;
        uint64_t carry = p0_ & o.p0_;
        r.p0_ = p0_ ^ o.p0_;
        r.p1_ = p1_ ^ o.p1_ ^ carry;
        return r;
    }
    Z4Vec& operator+=(const Z4Vec& o) { return *this = *this + o; }

    Z4Vec operator-() const {  // 1 <-> 3, 2 fixed
        Z4Vec r;
        r.p0_ = p0_;
        r.p1_ = p1_ ^ p0_;
        return r;
    }
    Z4Vec operator-(const Z4Vec& o) const { return *this + (-o); }
    Z4Vec& operator-=(const Z4Vec& o) { return *this = *this - o; }

    Z4Vec doubled() const {  // 2 * v
        Z4Vec r;
        r.p1_ = p0_;
        return r;
    }

    void negate_coord(int i) {
        if ((p0_ >> i) & 1) p1_ ^= uint64_t{1} << i;
    }

    BitVec mod2() const {
        BitVec b;
        for (int i = 0; i < 64; ++i)
            if ((p0_ >> i) & 1) b.set(i, true);
        return b;
    }

    // Halved vector of an all-even Z4Vec.
    BitVec halved() const {
        BitVec b;
        for (int i = 0; i < 64; ++i)
            if ((p1_ >> i) & 1) b.set(i, true);
        return b;
    }

    bool all_even() const { return p0_ == 0; }
    bool has_unit() const { return p0_ != 0; }
    // Lowest coordinate with an odd entry, or -1.
    int lowest_unit() const { return p0_ ? std::countr_zero(p0_) : -1; }
    int lowest_nonzero() const {
        uint64_t any = p0_ | p1_;
        return any ? std::countr_zero(any) : -1;
    }

    // n1 + 4*n2 + n3
    int euclidean_weight() const {
        return std::popcount(p0_) + 4 * std::popcount(p1_ & ~p0_);
    }

    // <x,y> mod 4
    int dot4(const Z4Vec& o) const {
        return (std::popcount(p0_ & o.p0_) + 2 * std::popcount(p0_ & o.p1_) +
                2 * std::popcount(p1_ & o.p0_)) &
               3;
    }

    bool operator==(const Z4Vec& o) const = default;
    bool operator<(const Z4Vec& o) const {
        return p1_ != o.p1_ ? p1_ < o.p1_ : p0_ < o.p0_;
    }

    uint64_t hash() const {
        uint64_t h = p0_ * 0x9e3779b97f4a7c15ull;
        return h ^ (p1_ + 0xbf58476d1ce4e5b9ull + (h << 7) + (h >> 3));
    }

    std::string to_string(int n) const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i) s[i] = static_cast<char>('0' + get(i));
        return s;
    }

    static Z4Vec from_string(const std::string& s) {
        Z4Vec v;
        for (size_t i = 0; i < s.size(); ++i) v.set(static_cast<int>(i), s[i] - '0');
        return v;
    }

private:
    uint64_t p0_, p1_;
};

inline Z4Vec scaled(const Z4Vec& v, int c) {
    Z4Vec r;
    if (c & 1) r += v;
    if (c & 2) r += v.doubled();
    return r;
}

}  // namespace z4wb
