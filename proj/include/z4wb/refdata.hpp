#pragma once

#include <string>
#include <utility>
#include <vector>

#include "z4wb/binary_code.hpp"
#include "z4wb/z4_code.hpp"

namespace z4wb::refdata {

// The published generator matrix of the extremal Type II Z4-code whose
// residue code has dimension 6.
const Z4Code& natural_code();

// Its residue code C6.
const BinaryCode& c6();

// Extremal Type II Z4-codes [I12 | M] whose residue codes are the seven
// non-Golay doubly even self-dual codes, keyed by component label.
const std::vector<std::pair<std::string, Z4Code>>& self_dual_residue_codes();

// The named weight-4 augmentation vectors for realizable codes.
const BitVec& realizable_vector(const std::string& name);

// The named generating vectors of the maximal non-realizable codes.
const BitVec& nonrealizable_vector(const std::string& name);

// Realizable [24,k,8] codes beyond the minimal three: each is generated by
// a previously defined code and the listed vectors.
struct ChainRow {
    std::string name;
    std::string parent;  // "C6", "C7_3", ...
    std::vector<std::string> vectors;
};
const std::vector<ChainRow>& realizable_chain();

// Maximal non-realizable codes <C6, vectors>, with the published quotient
// dimension m and number N of Type II lift classes.
struct MaximalRow {
    std::string name;
    std::vector<std::string> vectors;
    int m;
    long expected_classes;
};
const std::vector<MaximalRow>& maximal_nonrealizable();

// Published counts of inequivalent [24,k] codes meeting the residue
// conditions, split by realizability and minimum weight.
struct CensusRow {
    int k;
    int total, realizable_d8, realizable_d4, nonrealizable_d8, nonrealizable_d4;
};
const std::vector<CensusRow>& census();

// Construct <parent, vectors> for any named code of the realizable chain
// ("C6", "C7_1", "C7_2", or a ChainRow name).
BinaryCode realizable_code(const std::string& name);

}  // namespace z4wb::refdata
