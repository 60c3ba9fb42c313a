#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace z4wb {

// Packed bit vector, fixed capacity 128 coordinates.
class BitVec {
public:
    BitVec() : w_{0, 0} {}

    static BitVec unit(int i) {
        BitVec v;
        v.set(i, true);
        return v;
    }

    static BitVec ones(int n) {
        BitVec v;
        for (int i = 0; i < n; ++i) v.set(i, true);
        return v;
    }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool b) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    int weight() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

    bool is_zero() const { return (w_[0] | w_[1]) == 0; }

    BitVec operator^(const BitVec& o) const {
        BitVec r;
        r.w_[0] = w_[0] ^ o.w_[0];
        r.w_[1] = w_[1] ^ o.w_[1];
        return r;
    }
    BitVec& operator^=(const BitVec& o) {
        w_[0] ^= o.w_[0];
        w_[1] ^= o.w_[1];
        return *this;
    }
    BitVec operator&(const BitVec& o) const {
        BitVec r;
        r.w_[0] = w_[0] & o.w_[0];
        r.w_[1] = w_[1] & o.w_[1];
        return r;
    }

    // Standard inner product over GF(2).
    int dot(const BitVec& o) const {
        return (std::popcount(w_[0] & o.w_[0]) + std::popcount(w_[1] & o.w_[1])) & 1;
    }

    bool operator==(const BitVec& o) const = default;

    // Lexicographic with coordinate 0 most significant.
    static bool lex_less(const BitVec& a, const BitVec& b, int n) {
        for (int i = 0; i < n; ++i) {
            bool x = a.get(i), y = b.get(i);
            if (x != y) return y;  // 0 < 1
        }
        return false;
    }

    // Index of the lowest set coordinate, or -1.
    int lowest() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    uint64_t word(int i) const { return w_[i]; }

    uint64_t hash() const {
        uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= (w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        return h;
    }

    std::string to_string(int n) const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    static BitVec from_string(const std::string& s) {
        BitVec v;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') v.set(static_cast<int>(i), true);
        return v;
    }

private:
    std::array<uint64_t, 2> w_;
};

}  // namespace z4wb
