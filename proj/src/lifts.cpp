#include "z4wb/lifts.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

#include "z4wb/canonical.hpp"

namespace z4wb {

namespace {

using Raw = std::array<uint64_t, 3>;

bool raw_get(const Raw& r, int i) { return (r[i >> 6] >> (i & 63)) & 1; }
void raw_flip(Raw& r, int i) { r[i >> 6] ^= uint64_t{1} << (i & 63); }
void raw_xor(Raw& a, const Raw& b) {
    a[0] ^= b[0];
    a[1] ^= b[1];
    a[2] ^= b[2];
}
bool raw_eq(const Raw& a, const Raw& b) { return a == b; }

// The Type II constraints on correction tuples (x_1..x_k), x_i in the
// transversal of GF(2)^n / dual(C): linear over GF(2) because changing a
// lift row by 2x moves its Euclidean weight by 4(wt(x) - <g,x>) mod 8 and
// a pairwise Z4 inner product by 2(<g_i,x_j> + <g_j,x_i>) mod 4.
struct LiftSystem {
    BinaryCode residue, torsion;
    int n = 0, k = 0, m0 = 0;
    std::vector<int> free_cols;
    std::vector<Z4Vec> base_rows;
    Raw xstar{};
    std::vector<Raw> dirs;
    std::vector<int> dir_pivots;
};

LiftSystem solve_lift_system(const BinaryCode& c) {
    if (!c.satisfies_residue_conditions())
        throw std::invalid_argument("lift: code fails the residue conditions");
    LiftSystem s;
    s.residue = c;
    s.torsion = c.dual();
    s.n = c.length();
    s.k = c.dim();
    if (s.k * s.k > 192) throw std::invalid_argument("lift: residue dimension too large");

    std::vector<bool> is_pivot(s.n, false);
    for (int p : s.torsion.pivots()) is_pivot[p] = true;
    for (int i = 0; i < s.n; ++i)
        if (!is_pivot[i]) s.free_cols.push_back(i);
    if (static_cast<int>(s.free_cols.size()) != s.k)
        throw std::logic_error("lift: transversal dimension mismatch");

    for (const BitVec& g : c.basis()) s.base_rows.push_back(Z4Vec::lift(g, s.n));

    auto var = [&](int i, int t) { return i * s.k + t; };
    std::vector<Raw> rows;
    std::vector<int> rhs;
    for (int i = 0; i < s.k; ++i) {
        const BitVec& gi = c.basis()[i];
        Raw r{};
        for (int t = 0; t < s.k; ++t)
            if (!gi.get(s.free_cols[t])) raw_flip(r, var(i, t));
        rows.push_back(r);
        rhs.push_back((gi.weight() >> 2) & 1);
    }
    for (int i = 0; i < s.k; ++i)
        for (int j = i + 1; j < s.k; ++j) {
            const BitVec& gi = c.basis()[i];
            const BitVec& gj = c.basis()[j];
            Raw r{};
            for (int t = 0; t < s.k; ++t) {
                if (gi.get(s.free_cols[t])) raw_flip(r, var(j, t));
                if (gj.get(s.free_cols[t])) raw_flip(r, var(i, t));
            }
            rows.push_back(r);
            rhs.push_back(((gi & gj).weight() >> 1) & 1);
        }

    int nvars = s.k * s.k;
    std::vector<int> pivot_row(nvars, -1);
    size_t next = 0;
    for (int col = 0; col < nvars && next < rows.size(); ++col) {
        size_t sel = next;
        while (sel < rows.size() && !raw_get(rows[sel], col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[next]);
        std::swap(rhs[sel], rhs[next]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != next && raw_get(rows[r], col)) {
                raw_xor(rows[r], rows[next]);
                rhs[r] ^= rhs[next];
            }
        pivot_row[col] = static_cast<int>(next);
        ++next;
    }
    for (size_t r = next; r < rows.size(); ++r)
        if (rhs[r])
            throw std::runtime_error("lift: Type II correction system infeasible at equation " +
                                     std::to_string(r));

    for (int col = 0; col < nvars; ++col)
        if (pivot_row[col] >= 0 && rhs[pivot_row[col]]) raw_flip(s.xstar, col);
    for (int f = 0; f < nvars; ++f) {
        if (pivot_row[f] >= 0) continue;
        Raw d{};
        raw_flip(d, f);
        for (int col = 0; col < nvars; ++col)
            if (pivot_row[col] >= 0 && raw_get(rows[pivot_row[col]], f)) raw_flip(d, col);
        s.dirs.push_back(d);
        s.dir_pivots.push_back(f);
    }
    s.m0 = static_cast<int>(s.dirs.size());
    return s;
}

Z4Code decode_system(const LiftSystem& s, const Raw& x) {
    std::vector<Z4Vec> out;
    for (int i = 0; i < s.k; ++i) {
        BitVec bv;
        for (int t = 0; t < s.k; ++t)
            if (raw_get(x, i * s.k + t)) bv.set(s.free_cols[t], true);
        out.push_back(s.base_rows[i] + Z4Vec::lift(bv, s.n).doubled());
    }
    for (const BitVec& t : s.torsion.basis()) out.push_back(Z4Vec::lift(t, s.n).doubled());
    return Z4Code::from_rows(s.n, out);
}

}  // namespace

Z4Code base_type2_lift(const BinaryCode& c) {
    LiftSystem s = solve_lift_system(c);
    return decode_system(s, s.xstar);
}

Z4Code LiftSpace::decode_raw(const Raw& x) const {
    std::vector<Z4Vec> out;
    for (int i = 0; i < k_; ++i) {
        BitVec bv;
        for (int t = 0; t < k_; ++t)
            if (raw_get(x, i * k_ + t)) bv.set(free_cols_[t], true);
        out.push_back(base_rows_[i] + Z4Vec::lift(bv, n_).doubled());
    }
    for (const BitVec& t : torsion_.basis()) out.push_back(Z4Vec::lift(t, n_).doubled());
    return Z4Code::from_rows(n_, out);
}

LiftSpace::Raw LiftSpace::encode_raw(const Z4Code& code) const {
    if (code.length() != n_ || code.residue() != residue_ || code.torsion() != torsion_)
        throw std::invalid_argument("lift: code does not have the prescribed residue/torsion");
    Raw x{};
    for (int i = 0; i < k_; ++i) {
        Z4Vec diff = code.gen4()[i] - base_rows_[i];
        if (!diff.all_even()) throw std::logic_error("lift: generator residue mismatch");
        BitVec v = diff.halved();
        for (const BitVec& t : torsion_.basis())
            if (v.get(t.lowest())) v ^= t;
        for (int t = 0; t < k_; ++t)
            if (v.get(free_cols_[t])) raw_flip(x, i * k_ + t);
    }
    return x;
}

BitVec LiftSpace::raw_to_param(const Raw& x) const {
    BitVec y;
    Raw check = xstar_;
    for (int j = 0; j < m0_; ++j)
        if (raw_get(x, dir_pivots_[j]) != raw_get(xstar_, dir_pivots_[j])) {
            y.set(j, true);
            raw_xor(check, dirs_[j]);
        }
    if (!raw_eq(check, x)) throw std::invalid_argument("lift: code is not a Type II lift point");
    return y;
}

uint64_t LiftSpace::project(BitVec y) const {
    for (size_t r = 0; r < neg_rref_.size(); ++r)
        if (y.get(neg_pivots_[r])) y ^= neg_rref_[r];
    uint64_t p = 0;
    for (int t = 0; t < m_; ++t)
        if (y.get(quot_coords_[t])) p |= uint64_t{1} << t;
    return p;
}

BitVec LiftSpace::section(uint64_t point) const {
    BitVec y;
    for (int t = 0; t < m_; ++t)
        if ((point >> t) & 1) y.set(quot_coords_[t], true);
    return y;
}

Z4Code LiftSpace::decode(uint64_t point) const {
    BitVec y = section(point);
    Raw x = xstar_;
    for (int j = 0; j < m0_; ++j)
        if (y.get(j)) raw_xor(x, dirs_[j]);
    return decode_raw(x);
}

uint64_t LiftSpace::encode(const Z4Code& code) const {
    return project(raw_to_param(encode_raw(code)));
}

LiftSpace build_lift_space(const BinaryCode& c, uint64_t canon_node_cap) {
    LiftSystem sys = solve_lift_system(c);
    LiftSpace sp;
    sp.residue_ = sys.residue;
    sp.torsion_ = sys.torsion;
    sp.n_ = sys.n;
    sp.k_ = sys.k;
    sp.m0_ = sys.m0;
    sp.free_cols_ = sys.free_cols;
    sp.base_rows_ = sys.base_rows;
    sp.xstar_ = sys.xstar;
    sp.dirs_ = sys.dirs;
    sp.dir_pivots_ = sys.dir_pivots;
    sp.base_lift_ = decode_system(sys, sys.xstar);

    // The translation induced by each single-column negation, derived by
    // re-encoding the negated anchor code.
    for (int col = 0; col < sp.n_; ++col) {
        MonomialMap neg{Permutation::identity(sp.n_), BitVec::unit(col)};
        BitVec y = sp.raw_to_param(sp.encode_raw(sp.base_lift_.apply_monomial(neg)));
        for (size_t r = 0; r < sp.neg_rref_.size(); ++r)
            if (y.get(sp.neg_pivots_[r])) y ^= sp.neg_rref_[r];
        int p = -1;
        for (int i = 0; i < sp.m0_; ++i)
            if (y.get(i)) { p = i; break; }
        if (p < 0) continue;
        for (size_t r = 0; r < sp.neg_rref_.size(); ++r)
            if (sp.neg_rref_[r].get(p)) sp.neg_rref_[r] ^= y;
        size_t at = 0;
        while (at < sp.neg_pivots_.size() && sp.neg_pivots_[at] < p) ++at;
        sp.neg_rref_.insert(sp.neg_rref_.begin() + at, y);
        sp.neg_pivots_.insert(sp.neg_pivots_.begin() + at, p);
    }
    {
        std::vector<bool> used(sp.m0_, false);
        for (int p : sp.neg_pivots_) used[p] = true;
        for (int i = 0; i < sp.m0_; ++i)
            if (!used[i]) sp.quot_coords_.push_back(i);
        sp.m_ = static_cast<int>(sp.quot_coords_.size());
    }
    if (sp.m_ > 64) throw std::runtime_error("lift: quotient dimension exceeds 64");

    CanonicalCertificate cert = canonical_form(c, canon_node_cap);
    sp.aut_perms_ = cert.aut_generators;
    for (const Permutation& g : sp.aut_perms_) {
        MonomialMap mm{g, BitVec()};
        AffineMap a;
        a.m = sp.m_;
        a.b = sp.encode(sp.decode(0).apply_monomial(mm));
        for (int j = 0; j < sp.m_; ++j) {
            uint64_t e = uint64_t{1} << j;
            a.cols.push_back(sp.encode(sp.decode(e).apply_monomial(mm)) ^ a.b);
        }
        sp.aut_maps_.push_back(a);
    }
    return sp;
}

std::vector<Orbit> enumerate_classes(const LiftSpace& space, int m_cap) {
    int m = space.m();
    if (m > m_cap) throw std::runtime_error("lift: quotient dimension " + std::to_string(m) +
                                            " exceeds enumeration cap " + std::to_string(m_cap));
    uint64_t total = uint64_t{1} << m;
    std::vector<uint64_t> visited((total + 63) / 64, 0);
    auto seen = [&](uint64_t p) { return (visited[p >> 6] >> (p & 63)) & 1; };
    auto mark = [&](uint64_t p) { visited[p >> 6] |= uint64_t{1} << (p & 63); };

    std::vector<Orbit> orbits;
    std::vector<uint64_t> stack;
    for (uint64_t p = 0; p < total; ++p) {
        if (seen(p)) continue;
        uint64_t size = 0;
        stack.push_back(p);
        mark(p);
        while (!stack.empty()) {
            uint64_t q = stack.back();
            stack.pop_back();
            ++size;
            for (const AffineMap& a : space.aut_action()) {
                uint64_t r = a(q);
                if (!seen(r)) {
                    mark(r);
                    stack.push_back(r);
                }
            }
        }
        orbits.push_back({p, size});
    }
    return orbits;
}

RealizabilityVerdict decide_realizability(const BinaryCode& c, uint64_t budget, uint64_t seed,
                                          int m_cap) {
    LiftSpace space = build_lift_space(c);
    RealizabilityVerdict v;
    v.m = space.m();
    v.seed = seed;
    if (space.m() <= m_cap) {
        v.exhaustive = true;
        std::vector<Orbit> orbits = enumerate_classes(space, m_cap);
        v.classes_checked = orbits.size();
        for (const Orbit& o : orbits) {
            Z4Code code = space.decode(o.representative);
            if (code.is_extremal()) {
                v.status = RealizabilityVerdict::Status::Realizable;
                v.witness = code;
                return v;
            }
        }
        v.status = RealizabilityVerdict::Status::NonRealizable;
        return v;
    }
    std::mt19937_64 rng(seed);
    uint64_t mask = space.m() == 64 ? ~uint64_t{0} : (uint64_t{1} << space.m()) - 1;
    for (uint64_t it = 0; it < budget; ++it) {
        Z4Code code = space.decode(rng() & mask);
        if (code.is_extremal()) {
            v.status = RealizabilityVerdict::Status::Realizable;
            v.witness = code;
            v.points_sampled = it + 1;
            return v;
        }
    }
    v.status = RealizabilityVerdict::Status::Unknown;
    v.points_sampled = budget;
    return v;
}

}  // namespace z4wb
