#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "z4wb/bitvec.hpp"

namespace z4wb {

struct WeightDistribution {
    std::vector<uint64_t> counts;  // counts[w] for w = 0..n
    uint64_t total() const;
};

// A binary linear code held as a reduced row-echelon basis.  The stored
// representation is unique for a fixed coordinate order, so operator== is
// code equality (not equivalence).
class BinaryCode {
public:
    BinaryCode() : n_(0) {}
    static BinaryCode from_rows(int n, const std::vector<BitVec>& rows);
    static BinaryCode zero(int n) { return from_rows(n, {}); }

    int length() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const BitVec& v) const;
    // Coefficients of v in the RREF basis; nullopt if v is not a codeword.
    std::optional<BitVec> coefficients(const BitVec& v) const;

    BinaryCode dual() const;
    BinaryCode span_with(const BitVec& v) const;
    BinaryCode direct_sum(const BinaryCode& other) const;
    BinaryCode permuted(const std::vector<int>& images) const;

    // Full-code enumeration, 2^k codewords.  Budget: k <= 28.
    WeightDistribution weight_distribution() const;
    int min_weight() const;
    // Largest of 1,2,4,8 dividing every nonzero codeword weight.
    int divisibility() const;
    // Minimum weight over the coset v + C (v itself if the code is zero-dim).
    int coset_min_weight(const BitVec& v, BitVec* argmin = nullptr) const;

    bool is_doubly_even() const { return dim() == 0 || divisibility() >= 4; }
    // Conditions on a residue code of an extremal Type II Z4-code of
    // length 24: doubly even, contains the all-one vector, dual minimum
    // weight at least 4.
    bool satisfies_residue_conditions() const;

    bool operator==(const BinaryCode& o) const = default;
    uint64_t hash() const;

    // Text format: "binary <n> <k>" then k rows of 0/1 characters.
    void write(std::ostream& os) const;
    static BinaryCode read(std::istream& is);

private:
    int n_;
    std::vector<BitVec> basis_;
    std::vector<int> pivots_;

    template <class F>
    void for_each_codeword(F&& f) const;  // Gray-code traversal
};

}  // namespace z4wb
