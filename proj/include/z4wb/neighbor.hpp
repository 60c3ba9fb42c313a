#pragma once

#include <utility>

#include "z4wb/z4_code.hpp"

namespace z4wb {

// Weight-4 augmentation / de-augmentation of extremal Type II Z4-codes.
// Both are lattice-neighbor steps compiled to Z4 arithmetic: the shared
// even-unimodular sublattice appears as the index-2 kernel subcode, and the
// lattice glue vector as the Z4 glue row.

struct AugmentationWitness {
    BitVec a;       // weight-4 vector joining the residue code
    Z4Vec alpha;    // {0,1}-lift of a
    BitVec b;       // torsion vector with <a,b> = 1
    Z4Vec beta;     // {0,1}-lift of b
    Z4Vec glue;     // alpha + 2*beta
};

struct DeaugmentationWitness {
    BitVec a;            // weight-4 vector leaving the residue code
    Z4Vec alpha_prime;   // codeword of C with residue a
    Z4Vec alpha;         // alpha_prime restricted to supp(a), first entry negated
    BitVec c;            // (alpha - alpha_prime)/2 mod 2
    Z4Vec glue;          // alpha - alpha_prime
};

// Augmentation: C extremal Type II, wt(a) = 4, a not in the
// residue code, <residue, a> doubly even.  Returns C' extremal Type II with
// residue(C') = <residue(C), a>, sharing an index-2 subcode with C.
std::pair<Z4Code, AugmentationWitness> augment_extremal(const Z4Code& c, const BitVec& a);

// The partial converse: a in residue(C), wt(a) = 4.  Returns C' extremal
// Type II with residue(C') = {b in residue(C) : <b,c> = 0}, an index-2
// subcode not containing a.
std::pair<Z4Code, DeaugmentationWitness> deaugment_extremal(const Z4Code& c, const BitVec& a);

}  // namespace z4wb
