#include "z4wb/classify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "z4wb/canonical.hpp"
#include "z4wb/named_codes.hpp"
#include "z4wb/neighbor.hpp"
#include "z4wb/refdata.hpp"

namespace z4wb {

namespace {

BitVec permute_vec(const BitVec& v, const Permutation& p, int n) {
    BitVec r;
    for (int i = 0; i < n; ++i)
        if (v.get(i)) r.set(p(i), true);
    return r;
}

// Nonzero functionals on C vanishing on 1, one per Aut(C)-orbit.  A
// functional is the k-bit vector of its values on the RREF basis; sigma
// acts by lambda -> lambda o sigma^-1.
std::vector<uint32_t> functional_orbit_reps(const BinaryCode& c,
                                            const std::vector<Permutation>& gens) {
    int k = c.dim();
    int n = c.length();
    uint32_t one_coeffs = static_cast<uint32_t>(c.coefficients(BitVec::ones(n))->word(0));
    std::vector<std::vector<uint32_t>> mats;
    for (const Permutation& g : gens) {
        Permutation inv = g.inverse();
        std::vector<uint32_t> rows;
        for (int i = 0; i < k; ++i) {
            auto co = c.coefficients(permute_vec(c.basis()[i], inv, n));
            rows.push_back(static_cast<uint32_t>(co->word(0)));
        }
        mats.push_back(std::move(rows));
    }
    auto apply = [&](const std::vector<uint32_t>& m, uint32_t mask) {
        uint32_t out = 0;
        for (int i = 0; i < k; ++i)
            if (std::popcount(m[i] & mask) & 1) out |= uint32_t{1} << i;
        return out;
    };
    uint32_t total = uint32_t{1} << k;
    std::vector<bool> seen(total, false);
    std::vector<uint32_t> reps, stack;
    for (uint32_t mask = 1; mask < total; ++mask) {
        if (seen[mask] || (std::popcount(mask & one_coeffs) & 1)) continue;
        reps.push_back(mask);
        stack.push_back(mask);
        seen[mask] = true;
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            for (const auto& m : mats) {
                uint32_t r = apply(m, q);
                if (!seen[r]) {
                    seen[r] = true;
                    stack.push_back(r);
                }
            }
        }
    }
    return reps;
}

BinaryCode subcode_of_functional(const BinaryCode& c, uint32_t mask) {
    int first = std::countr_zero(mask);
    std::vector<BitVec> rows;
    for (int i = 0; i < c.dim(); ++i) {
        if (i == first) continue;
        if ((mask >> i) & 1)
            rows.push_back(c.basis()[i] ^ c.basis()[first]);
        else
            rows.push_back(c.basis()[i]);
    }
    return BinaryCode::from_rows(c.length(), rows);
}

// Weight-4 augmentation candidates of C, one per Aut(C)-orbit: weight-4
// vectors of dual(C) \ C (exactly those whose span with C is doubly even).
std::vector<BitVec> augmentation_orbit_reps(const BinaryCode& c,
                                            const std::vector<Permutation>& gens) {
    int n = c.length();
    BinaryCode d = c.dual();
    std::unordered_set<uint32_t> cand;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                for (int m = l + 1; m < n; ++m) {
                    BitVec v;
                    v.flip(i); v.flip(j); v.flip(l); v.flip(m);
                    if (d.contains(v) && !c.contains(v))
                        cand.insert(static_cast<uint32_t>(v.word(0)));
                }
    std::vector<BitVec> reps;
    std::unordered_set<uint32_t> seen;
    std::vector<uint32_t> ordered(cand.begin(), cand.end());
    std::sort(ordered.begin(), ordered.end());
    std::vector<uint32_t> stack;
    for (uint32_t v0 : ordered) {
        if (seen.count(v0)) continue;
        BitVec rep;
        for (int i = 0; i < 32; ++i)
            if ((v0 >> i) & 1) rep.set(i, true);
        reps.push_back(rep);
        seen.insert(v0);
        stack.push_back(v0);
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            BitVec qv;
            for (int i = 0; i < 32; ++i)
                if ((q >> i) & 1) qv.set(i, true);
            for (const Permutation& g : gens) {
                uint32_t r = static_cast<uint32_t>(permute_vec(qv, g, n).word(0));
                if (!seen.count(r)) {
                    seen.insert(r);
                    stack.push_back(r);
                }
            }
        }
    }
    return reps;
}

std::string canon_key(const BinaryCode& c) {
    std::ostringstream os;
    c.write(os);
    return os.str();
}

}  // namespace

int AugmentationDag::node_of(const BinaryCode& canonical) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].canonical == canonical) return static_cast<int>(i);
    return -1;
}

std::vector<int> AugmentationDag::count_by_dim() const {
    std::vector<int> counts(13, 0);
    for (const CodeRecord& r : nodes) ++counts[r.k];
    return counts;
}

AugmentationDag enumerate_condition_codes(uint64_t canon_node_cap) {
    AugmentationDag dag;
    std::vector<std::vector<Permutation>> auts;
    std::unordered_map<uint64_t, std::vector<int>> index;

    auto add_node = [&](const BinaryCode& code) -> int {
        CanonicalCertificate cert = canonical_form(code, canon_node_cap);
        for (int i : index[cert.canonical.hash()])
            if (dag.nodes[i].canonical == cert.canonical) return i;
        CodeRecord rec;
        rec.code = code;
        rec.canonical = cert.canonical;
        rec.k = code.dim();
        rec.min_weight = code.min_weight();
        rec.dual_min_weight = code.dual().min_weight();
        dag.nodes.push_back(std::move(rec));
        auts.push_back(cert.aut_generators);
        int idx = static_cast<int>(dag.nodes.size()) - 1;
        index[cert.canonical.hash()].push_back(idx);
        return idx;
    };

    for (const std::string& label : self_dual24_labels()) add_node(named_code(label));

    for (int k = 12; k > 6; --k) {
        size_t level_end = dag.nodes.size();
        for (size_t i = 0; i < level_end; ++i) {
            if (dag.nodes[i].k != k) continue;
            // copy: add_node below grows dag.nodes and may reallocate
            BinaryCode c = dag.nodes[i].code;
            for (uint32_t mask : functional_orbit_reps(c, auts[i])) {
                BinaryCode sub = subcode_of_functional(c, mask);
                if (sub.dual().min_weight() < 4) continue;
                add_node(sub);
            }
        }
    }

    // published labels
    std::vector<std::string> chain_names{"C6", "C7_1", "C7_2"};
    for (const auto& row : refdata::realizable_chain()) chain_names.push_back(row.name);
    for (const std::string& name : chain_names) {
        BinaryCode code = refdata::realizable_code(name);
        int idx = dag.node_of(canonical_form(code, canon_node_cap).canonical);
        if (idx < 0) throw std::logic_error("classify: labeled code " + name + " not enumerated");
        dag.nodes[idx].label = name;
    }
    for (const auto& row : refdata::maximal_nonrealizable()) {
        BinaryCode code = refdata::c6();
        for (const std::string& vn : row.vectors)
            code = code.span_with(refdata::nonrealizable_vector(vn));
        int idx = dag.node_of(canonical_form(code, canon_node_cap).canonical);
        if (idx < 0) throw std::logic_error("classify: labeled code " + row.name + " not enumerated");
        dag.nodes[idx].label = row.name;
    }

    // weight-4 augmentation edges, then sort nodes by (k, canonical form)
    std::vector<DagEdge> edges;
    for (size_t i = 0; i < dag.nodes.size(); ++i) {
        if (dag.nodes[i].k == 12) continue;
        const BinaryCode& c = dag.nodes[i].code;
        for (const BitVec& a : augmentation_orbit_reps(c, auts[i])) {
            BinaryCode span = c.span_with(a);
            int super = dag.node_of(canonical_form(span, canon_node_cap).canonical);
            if (super < 0) throw std::logic_error("classify: augmentation left the node set");
            edges.push_back({static_cast<int>(i), super, a});
        }
    }

    std::vector<int> order(dag.nodes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dag.nodes[a].k != dag.nodes[b].k) return dag.nodes[a].k < dag.nodes[b].k;
        return canon_key(dag.nodes[a].canonical) < canon_key(dag.nodes[b].canonical);
    });
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<CodeRecord> sorted;
    for (int idx : order) sorted.push_back(std::move(dag.nodes[idx]));
    dag.nodes = std::move(sorted);
    for (DagEdge& e : edges) {
        e.sub = pos[e.sub];
        e.super = pos[e.super];
    }
    dag.edges = std::move(edges);
    return dag;
}

void assign_statuses(AugmentationDag& dag, uint64_t budget, uint64_t seed, int m_cap) {
    for (size_t i = 0; i < dag.nodes.size(); ++i) {
        CodeRecord& rec = dag.nodes[i];
        if (rec.min_weight == 4) {
            // constructive route: augment a realizable subcode's witness
            bool done = false;
            for (const DagEdge& e : dag.edges) {
                if (e.super != static_cast<int>(i)) continue;
                const CodeRecord& sub = dag.nodes[e.sub];
                if (sub.status.status != RealizabilityVerdict::Status::Realizable) continue;
                auto [lifted, w] = augment_extremal(*sub.status.witness, e.a);
                BinaryCode span = sub.code.span_with(e.a);
                auto perm = are_equivalent(span, rec.code);
                if (!perm) throw std::logic_error("classify: edge target misaligned");
                Z4Code witness = lifted.apply_monomial({*perm, BitVec()});
                if (witness.residue() != rec.code)
                    throw std::logic_error("classify: witness residue mismatch");
                rec.status.status = RealizabilityVerdict::Status::Realizable;
                rec.status.witness = witness;
                rec.provenance.push_back("weight-4 augmentation from node " +
                                         std::to_string(e.sub) + " by " + e.a.to_string(24));
                done = true;
                break;
            }
            if (done) continue;
        }
        rec.status = decide_realizability(rec.code, budget, seed, m_cap);
        std::string how = rec.status.exhaustive
                              ? "lift space exhaustive: m=" + std::to_string(rec.status.m) +
                                    ", classes=" + std::to_string(rec.status.classes_checked)
                              : "lift space randomized: m=" + std::to_string(rec.status.m) +
                                    ", seed=" + std::to_string(rec.status.seed) + ", samples=" +
                                    std::to_string(rec.status.points_sampled);
        rec.provenance.push_back(how);
    }
}

ClassificationReport verify_classification_theorem(const AugmentationDag& dag) {
    ClassificationReport rep;
    int n = static_cast<int>(dag.nodes.size());
    std::vector<bool> realizable(n, false);
    rep.no_unknown = true;
    for (int i = 0; i < n; ++i) {
        auto s = dag.nodes[i].status.status;
        if (s == RealizabilityVerdict::Status::Realizable) {
            realizable[i] = true;
            ++rep.realizable;
        } else if (s == RealizabilityVerdict::Status::NonRealizable) {
            ++rep.nonrealizable;
        } else {
            rep.no_unknown = false;
        }
    }

    rep.realizable_closed_upward = true;
    for (const DagEdge& e : dag.edges)
        if (realizable[e.sub] && !realizable[e.super]) rep.realizable_closed_upward = false;

    // (i) <=> (ii): every realizable node reachable from a realizable
    // minimum-weight-8 node by weight-4 augmentation
    std::vector<bool> reach(n, false);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (realizable[i] && dag.nodes[i].min_weight == 8) {
            reach[i] = true;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const DagEdge& e : dag.edges)
            if (e.sub == q && !reach[e.super]) {
                reach[e.super] = true;
                stack.push_back(e.super);
            }
    }
    rep.realizable_reachable = true;
    for (int i = 0; i < n; ++i)
        if (realizable[i] && !reach[i]) rep.realizable_reachable = false;

    // (i) <=> (iii): nothing non-realizable is reachable from a realizable
    // node (in particular no maximal non-realizable code)
    std::vector<bool> up(n, false);
    for (int i = 0; i < n; ++i)
        if (realizable[i]) {
            up[i] = true;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const DagEdge& e : dag.edges)
            if (e.sub == q && !up[e.super]) {
                up[e.super] = true;
                stack.push_back(e.super);
            }
    }
    rep.maximal_unreachable = true;
    for (int i = 0; i < n; ++i)
        if (up[i] && !realizable[i]) rep.maximal_unreachable = false;
    return rep;
}

}  // namespace z4wb
