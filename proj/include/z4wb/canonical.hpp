#pragma once

#include <optional>

#include "z4wb/binary_code.hpp"
#include "z4wb/perm.hpp"

namespace z4wb {

struct CanonicalCertificate {
    BinaryCode canonical;
    Permutation witness;  // witness applied to the input yields `canonical`
    std::vector<Permutation> aut_generators;
    unsigned __int128 aut_order = 1;
    uint64_t nodes = 0;  // search nodes visited
};

struct CanonicalBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical form under coordinate permutations: the column order making the
// reduced row-echelon generator matrix lexicographically minimal, searched
// by backtracking over column prefixes with automorphism pruning.  The set
// of automorphisms discovered generates the full automorphism group.
CanonicalCertificate canonical_form(const BinaryCode& c, uint64_t node_cap = 200'000'000);

// A permutation p with p applied to a giving b, if the codes are equivalent.
std::optional<Permutation> are_equivalent(const BinaryCode& a, const BinaryCode& b,
                                          uint64_t node_cap = 200'000'000);

}  // namespace z4wb
