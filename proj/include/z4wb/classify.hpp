#pragma once

#include <string>
#include <vector>

#include "z4wb/binary_code.hpp"
#include "z4wb/lifts.hpp"
#include "z4wb/z4_code.hpp"

namespace z4wb {

// One equivalence class of [24,k] codes satisfying the residue conditions.
struct CodeRecord {
    BinaryCode code;       // representative, in discovery coordinates
    BinaryCode canonical;  // class key
    int k = 0;
    int min_weight = 0;
    int dual_min_weight = 0;
    std::string label;  // published name, when the class matches one
    RealizabilityVerdict status;
    std::vector<std::string> provenance;
};

// Edge sub --a--> super: span_with(nodes[sub].code, a) is equivalent to
// nodes[super].code, wt(a) = 4.  One witness vector per Aut(sub)-orbit.
struct DagEdge {
    int sub = 0;
    int super = 0;
    BitVec a;
};

struct AugmentationDag {
    std::vector<CodeRecord> nodes;  // sorted by (k, canonical)
    std::vector<DagEdge> edges;

    int node_of(const BinaryCode& canonical) const;  // -1 if absent
    std::vector<int> count_by_dim() const;           // counts[k], k = 0..12
};

// All inequivalent [24,k] codes meeting the residue conditions, found by
// codimension-1 descent from the nine doubly even self-dual codes, plus
// the weight-4 augmentation edges between them.  Labels from the published
// generator lists are attached where classes match.
AugmentationDag enumerate_condition_codes(uint64_t canon_node_cap = 200'000'000);

// Realizability for every node: minimum-weight-8 nodes by lift-space
// search (exhaustive when the quotient dimension allows, else seeded
// sampling), minimum-weight-4 nodes constructively by weight-4
// augmentation from a realizable subcode, falling back to lift search.
// Realizable witnesses are stored with residue equal to the node's
// representative code.
void assign_statuses(AugmentationDag& dag, uint64_t budget = 1'000'000, uint64_t seed = 1,
                     int m_cap = 24);

struct ClassificationReport {
    bool realizable_closed_upward = false;   // edges out of realizable nodes
    bool realizable_reachable = false;       // (i) => (ii)
    bool maximal_unreachable = false;        // (i) => (iii)
    bool no_unknown = false;
    int realizable = 0, nonrealizable = 0;
    bool ok() const {
        return realizable_closed_upward && realizable_reachable && maximal_unreachable &&
               no_unknown;
    }
};

ClassificationReport verify_classification_theorem(const AugmentationDag& dag);

}  // namespace z4wb
