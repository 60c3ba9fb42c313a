#include "z4wb/moonshine.hpp"

#include <stdexcept>

namespace z4wb {

namespace {

// Minimum weight of the dual without enumerating it: weight <= 3 dual
// words are column relations of the generator matrix.
bool dual_min_ge4(const BinaryCode& c) {
    int n = c.length();
    int k = c.dim();
    std::vector<uint32_t> cols(n, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (c.basis()[i].get(j)) cols[j] |= uint32_t{1} << i;
    for (int i = 0; i < n; ++i) {
        if (cols[i] == 0) return false;
        for (int j = i + 1; j < n; ++j)
            if (cols[i] == cols[j]) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if ((cols[i] ^ cols[j] ^ cols[l]) == 0) return false;
    return true;
}

}  // namespace

BitVec map_d(const BitVec& x, int n) {
    BitVec r;
    for (int i = 0; i < n; ++i)
        if (x.get(i)) {
            r.set(2 * i, true);
            r.set(2 * i + 1, true);
        }
    return r;
}

BitVec map_l(const BitVec& x, int n) {
    BitVec r;
    for (int i = 0; i < n; ++i)
        if (x.get(i)) r.set(2 * i, true);
    return r;
}

BinaryCode doubling(const BinaryCode& c) {
    int n = c.length();
    std::vector<BitVec> rows;
    for (const BitVec& g : c.basis()) rows.push_back(map_d(g, n));
    rows.push_back(map_l(BitVec::ones(n), n));
    return BinaryCode::from_rows(2 * n, rows);
}

TriplyEvenCandidate moonshine_candidate_check(const BinaryCode& d) {
    if (d.length() != 48) throw std::invalid_argument("moonshine: code length must be 48");
    TriplyEvenCandidate cand;
    cand.code = d;
    cand.triply_even = d.dim() == 0 || d.divisibility() >= 8;
    cand.contains_one = d.contains(BitVec::ones(48));
    cand.dual_min_ge4 = dual_min_ge4(d);
    if (!cand.triply_even || !cand.contains_one || !cand.dual_min_ge4 || d.dim() < 7) {
        cand.status.verdict = MoonshineStatus::Verdict::NotMoonshine;
        cand.status.rule = MoonshineStatus::Rule::FailsNecessaryConditions;
        std::string which = !cand.triply_even     ? "not triply even"
                            : !cand.contains_one  ? "does not contain the all-one vector"
                            : !cand.dual_min_ge4  ? "dual minimum weight below 4"
                                                  : "dimension below 7";
        cand.status.chain.push_back("fails necessary condition: " + which);
    }
    return cand;
}

MoonshineStatus doubling_status_from(const BinaryCode& b, const RealizabilityVerdict& verdict) {
    MoonshineStatus st;
    switch (verdict.status) {
        case RealizabilityVerdict::Status::Realizable:
            st.verdict = MoonshineStatus::Verdict::Moonshine;
            st.rule = MoonshineStatus::Rule::DoublingOfRealizable;
            st.witness = verdict.witness;
            st.chain.push_back("doubling of a realizable code of dimension " +
                               std::to_string(b.dim()));
            break;
        case RealizabilityVerdict::Status::NonRealizable:
            st.verdict = MoonshineStatus::Verdict::NotMoonshine;
            st.rule = MoonshineStatus::Rule::DoublingOfNonRealizable;
            st.classes_checked = verdict.classes_checked;
            st.chain.push_back("doubling of a non-realizable code (" +
                               std::to_string(verdict.classes_checked) +
                               " lift classes, none extremal)");
            break;
        case RealizabilityVerdict::Status::Unknown:
            st.verdict = MoonshineStatus::Verdict::Unknown;
            break;
    }
    return st;
}

MoonshineStatus doubling_status(const BinaryCode& b, uint64_t budget, uint64_t seed, int m_cap) {
    if (b.length() != 24 || !b.is_doubly_even())
        throw std::invalid_argument("moonshine: doubling status needs a doubly even length-24 code");
    if (!b.satisfies_residue_conditions()) {
        MoonshineStatus st;
        st.verdict = MoonshineStatus::Verdict::NotMoonshine;
        st.rule = MoonshineStatus::Rule::DoublingOfNonRealizable;
        st.chain.push_back("halved code fails the residue conditions, so no extremal lift exists");
        return st;
    }
    return doubling_status_from(b, decide_realizability(b, budget, seed, m_cap));
}

MoonshineStatus weight8_augment_status(const TriplyEvenCandidate& candidate, const BitVec& xi) {
    const BinaryCode& d = candidate.code;
    if (d.contains(xi)) throw std::invalid_argument("moonshine: xi must lie outside the code");
    BinaryCode span = d.span_with(xi);
    if (span.divisibility() < 8)
        throw std::invalid_argument("moonshine: the span with xi must be triply even");
    if (candidate.status.verdict != MoonshineStatus::Verdict::Moonshine)
        throw std::invalid_argument("moonshine: the base candidate must be a moonshine code");
    MoonshineStatus st;
    int w = d.coset_min_weight(xi);
    if (w == 8) {
        st.verdict = MoonshineStatus::Verdict::Moonshine;
        st.rule = MoonshineStatus::Rule::Weight8AugmentationOf;
        st.xi = xi;
        st.chain = candidate.status.chain;
        st.chain.push_back("weight-8 augmentation by " + xi.to_string(48) + " (coset minimum 8)");
    } else {
        st.verdict = MoonshineStatus::Verdict::Unknown;
        st.chain.push_back("coset minimum weight " + std::to_string(w) +
                           " != 8: augmentation rule not applicable");
    }
    return st;
}

std::vector<BinaryCode> weight8_deaugment_candidates(const BinaryCode& d, const BitVec& eta) {
    if (eta.weight() != 8) throw std::invalid_argument("moonshine: wt(eta) must be 8");
    auto coeffs = d.coefficients(eta);
    if (!coeffs) throw std::invalid_argument("moonshine: eta must lie in the code");
    int k = d.dim();
    std::vector<BinaryCode> out;
    for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
        int par = 0;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1 && coeffs->get(i)) par ^= 1;
        if (!par) continue;  // functional must not vanish on eta
        int first = -1;
        std::vector<BitVec> rows;
        for (int i = 0; i < k; ++i) {
            if (!((mask >> i) & 1)) {
                rows.push_back(d.basis()[i]);
            } else if (first < 0) {
                first = i;
            } else {
                rows.push_back(d.basis()[i] ^ d.basis()[first]);
            }
        }
        out.push_back(BinaryCode::from_rows(d.length(), rows));
    }
    return out;
}

}  // namespace z4wb
