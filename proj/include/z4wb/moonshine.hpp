#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z4wb/binary_code.hpp"
#include "z4wb/lifts.hpp"
#include "z4wb/z4_code.hpp"

namespace z4wb {

// d(a_1..a_n) = (a_1,a_1,...,a_n,a_n); l(a_1..a_n) = (a_1,0,...,a_n,0).
BitVec map_d(const BitVec& x, int n);
BitVec map_l(const BitVec& x, int n);

// The extended doubling <d(C), l(1)>.  For a doubly even [8n,k] code the
// result is a triply even [16n,k+1] code; if dual(C) is even with minimum
// weight >= 4, the dual of the doubling is too.
BinaryCode doubling(const BinaryCode& c);

// Whether a triply even code is a 1/16-code of the moonshine VOA, decided
// only through the code-level rules: the necessary conditions, the
// doubling criterion (realizability of the halved code), and weight-8
// augmentation.  Codes reachable by no rule stay Unknown.
struct MoonshineStatus {
    enum class Verdict { Moonshine, NotMoonshine, Unknown };
    enum class Rule {
        None,
        DoublingOfRealizable,
        Weight8AugmentationOf,
        FailsNecessaryConditions,
        DoublingOfNonRealizable,
    };
    Verdict verdict = Verdict::Unknown;
    Rule rule = Rule::None;
    std::optional<Z4Code> witness;          // extremal lift, doubling rules
    std::optional<uint64_t> classes_checked;  // non-realizable certificate
    std::optional<BitVec> xi;               // augmentation vector
    std::vector<std::string> chain;         // replayable justification
};

struct TriplyEvenCandidate {
    BinaryCode code;  // length 48
    bool triply_even = false;
    bool contains_one = false;
    bool dual_min_ge4 = false;
    MoonshineStatus status;
};

// Necessary conditions for a moonshine code (plus dim >= 7); NotMoonshine
// when one fails, Unknown otherwise.
TriplyEvenCandidate moonshine_candidate_check(const BinaryCode& d);

// Status of the doubling of a length-24 doubly even code B: Moonshine iff
// B is the residue of an extremal Type II Z4-code.  The verdict may be
// supplied from an existing realizability run.
MoonshineStatus doubling_status(const BinaryCode& b, uint64_t budget = 1'000'000,
                                uint64_t seed = 1, int m_cap = 24);
MoonshineStatus doubling_status_from(const BinaryCode& b, const RealizabilityVerdict& verdict);

// Weight-8 augmentation: if candidate D is Moonshine, xi is outside D,
// <D,xi> is triply even and the coset xi+D has minimum weight 8, then
// <D,xi> is Moonshine.  Anything short of that is Unknown.
MoonshineStatus weight8_augment_status(const TriplyEvenCandidate& candidate, const BitVec& xi);

// All index-2 subcodes D' of D with eta outside D' and <D',eta> = D.  At
// least one is a moonshine code when D is (existential; which one is not
// computable from code-level data).
std::vector<BinaryCode> weight8_deaugment_candidates(const BinaryCode& d, const BitVec& eta);

}  // namespace z4wb
