#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "z4wb/binary_code.hpp"
#include "z4wb/perm.hpp"
#include "z4wb/z4_code.hpp"

namespace z4wb {

// Invertible affine map y -> My + b on GF(2)^m, m <= 64.
struct AffineMap {
    int m = 0;
    uint64_t b = 0;
    std::vector<uint64_t> cols;  // column j = image of e_j, offset removed

    uint64_t operator()(uint64_t y) const {
        uint64_t r = b;
        while (y) {
            r ^= cols[std::countr_zero(y)];
            y &= y - 1;
        }
        return r;
    }
};

// One Type II lift of a binary code C meeting the residue conditions:
// residue C, torsion dual(C).  Throws std::invalid_argument on a bad
// residue and std::runtime_error if the correction system is infeasible.
Z4Code base_type2_lift(const BinaryCode& c);

// The affine space of all Type II Z4-codes with residue C, presented as a
// GF(2)-torsor of dimension m0 anchored at base_type2_lift(C), quotiented
// by the subspace generated by single-column negations.  Quotient points
// are m-bit integers; Aut(C) acts on them by affine maps.
class LiftSpace {
public:
    const BinaryCode& residue() const { return residue_; }
    const Z4Code& base_lift() const { return base_lift_; }

    int m0() const { return m0_; }
    int m() const { return m_; }
    // The closed-form dimension 1 + k(k-1)/2; recorded for comparison with
    // the computed m0.
    int predicted_m0() const {
        int k = residue_.dim();
        return 1 + k * (k - 1) / 2;
    }
    int negation_dim() const { return m0_ - m_; }

    const std::vector<Permutation>& aut_generators() const { return aut_perms_; }
    const std::vector<AffineMap>& aut_action() const { return aut_maps_; }

    // decode(0) is base_lift up to column negations; every decoded code is
    // Type II with residue C.
    Z4Code decode(uint64_t point) const;
    // The quotient point of any Type II code with residue C; throws
    // std::invalid_argument if the code is not in the space.
    uint64_t encode(const Z4Code& code) const;

private:
    friend LiftSpace build_lift_space(const BinaryCode&, uint64_t);

    using Raw = std::array<uint64_t, 3>;  // correction tuple, k^2 <= 192 bits

    Z4Code decode_raw(const Raw& x) const;
    Raw encode_raw(const Z4Code& code) const;
    BitVec raw_to_param(const Raw& x) const;  // coordinates in GF(2)^m0
    uint64_t project(BitVec y) const;         // GF(2)^m0 -> quotient
    BitVec section(uint64_t point) const;     // quotient -> GF(2)^m0

    BinaryCode residue_, torsion_;
    Z4Code base_lift_;
    int n_ = 0, k_ = 0, m0_ = 0, m_ = 0;
    std::vector<int> free_cols_;             // transversal of GF(2)^n / torsion
    std::vector<Z4Vec> base_rows_;           // {0,1}-lifts of the residue basis
    Raw xstar_{};                            // particular solution
    std::vector<Raw> dirs_;                  // homogeneous solution basis
    std::vector<int> dir_pivots_;            // free variable of each direction
    std::vector<BitVec> neg_rref_;           // negation span, RREF over GF(2)^m0
    std::vector<int> neg_pivots_;
    std::vector<int> quot_coords_;           // complement coordinates, size m
    std::vector<Permutation> aut_perms_;
    std::vector<AffineMap> aut_maps_;
};

LiftSpace build_lift_space(const BinaryCode& c, uint64_t canon_node_cap = 200'000'000);

struct Orbit {
    uint64_t representative;  // minimum point index
    uint64_t size;
};

// Orbits of the Aut(C) action on the 2^m quotient points.  Refuses m
// beyond the cap (bitmap of 2^m bits).
std::vector<Orbit> enumerate_classes(const LiftSpace& space, int m_cap = 24);

struct RealizabilityVerdict {
    enum class Status { Realizable, NonRealizable, Unknown };
    Status status = Status::Unknown;
    std::optional<Z4Code> witness;  // extremal, residue C
    uint64_t classes_checked = 0;   // NonRealizable: total orbit count N
    uint64_t points_sampled = 0;    // randomized mode
    uint64_t seed = 0;
    int m = 0;
    bool exhaustive = false;
};

// Exhaustive orbit scan when m <= m_cap; otherwise seeded random sampling
// of up to `budget` quotient points.
RealizabilityVerdict decide_realizability(const BinaryCode& c, uint64_t budget = 1'000'000,
                                          uint64_t seed = 1, int m_cap = 24);

}  // namespace z4wb
