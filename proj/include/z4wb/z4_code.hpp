#pragma once

#include <iosfwd>
#include <vector>

#include "z4wb/binary_code.hpp"
#include "z4wb/perm.hpp"
#include "z4wb/z4vec.hpp"

namespace z4wb {

struct MonomialMap {
    Permutation perm;
    BitVec signs;  // coordinates negated before permuting
};

// A Z4-linear code in a unique standard form: gen4 holds the k1 order-4
// rows (one per residue RREF row, even parts reduced modulo the torsion
// code), gen2 the k2 order-2 rows (doubled torsion RREF rows whose pivots
// are not residue pivots).  Two Z4Code values are equal iff they are the
// same code.
class Z4Code {
public:
    Z4Code() : n_(0) {}
    static Z4Code from_rows(int n, const std::vector<Z4Vec>& rows);

    int length() const { return n_; }
    int k1() const { return static_cast<int>(gen4_.size()); }
    int k2() const { return static_cast<int>(gen2_.size()); }
    // log2 |C| = 2*k1 + k2
    int log2_size() const { return 2 * k1() + k2(); }
    const std::vector<Z4Vec>& gen4() const { return gen4_; }
    const std::vector<Z4Vec>& gen2() const { return gen2_; }
    std::vector<Z4Vec> generators() const;  // gen4 then gen2

    const BinaryCode& residue() const { return residue_; }
    const BinaryCode& torsion() const { return torsion_; }

    bool contains(const Z4Vec& v) const;

    Z4Code dual() const;
    bool is_self_dual() const;
    // Self-dual plus generator Euclidean weights divisible by 8; sufficient
    // for Type II by Euclid(x+y) = Euclid(x)+Euclid(y)+2<x,y> (mod 8) on
    // self-orthogonal codes.
    bool is_type2() const;
    // Same predicate by full codeword enumeration (oracle; log2size <= 26).
    bool is_type2_exhaustive() const;

    // Exact minimum Euclidean weight over nonzero codewords; stops early
    // once a weight below `early_below` is seen.  log2size <= 26.
    int min_euclidean_weight(int early_below = 0) const;
    bool is_extremal() const;

    // Enumerate all codewords, zero first.
    template <class F>
    void for_each_codeword(F&& f) const {
        std::vector<Z4Vec> steps;  // subset sums cover the code exactly once
        for (const Z4Vec& g : gen4_) steps.push_back(g);
        for (const Z4Vec& g : gen4_) steps.push_back(g.doubled());
        for (const Z4Vec& g : gen2_) steps.push_back(g);
        int k = static_cast<int>(steps.size());
        if (k > 26) throw std::runtime_error("Z4 codeword enumeration budget exceeded");
        Z4Vec cur;
        f(cur);
        uint64_t total = uint64_t{1} << k;
        for (uint64_t s = 1; s < total; ++s) {
            cur += steps[std::countr_zero(s)];
            f(cur);
        }
    }

    Z4Code apply_monomial(const MonomialMap& m) const;

    bool operator==(const Z4Code& o) const = default;
    uint64_t hash() const;

    // Text format: "z4 <n> <k1> <k2>" then rows over {0,1,2,3}.
    void write(std::ostream& os) const;
    static Z4Code read(std::istream& is);

private:
    int n_;
    std::vector<Z4Vec> gen4_, gen2_;
    BinaryCode residue_, torsion_;
};

}  // namespace z4wb
