#include "z4wb/z4_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace z4wb {

namespace {

// Unique coset representative of s modulo the code t (RREF reduction).
BitVec reduce_mod(const BinaryCode& t, BitVec s) {
    for (size_t i = 0; i < t.basis().size(); ++i)
        if (s.get(t.pivots()[i])) s ^= t.basis()[i];
    return s;
}

}  // namespace

Z4Code Z4Code::from_rows(int n, const std::vector<Z4Vec>& rows) {
    if (n < 1 || n > 64) throw std::invalid_argument("Z4Code: length out of range");
    for (const Z4Vec& v : rows)
        for (int i = n; i < 64; ++i)
            if (v.get(i)) throw std::invalid_argument("Z4Code: row longer than code length");

    int nrows = static_cast<int>(rows.size());
    if (nrows > 128) throw std::invalid_argument("Z4Code: too many generator rows");

    // GF(2) elimination of the mod-2 rows with coefficient tracking: gives
    // the residue code, Z4 lifts of its RREF rows, and a kernel basis whose
    // Z4 sums generate the even subcode together with 2 * rows.
    struct TrackedRow {
        BitVec value, coeffs;
    };
    std::vector<TrackedRow> reduced;   // echelon rows with distinct pivots
    std::vector<BitVec> kernel_coeffs;  // coefficient vectors summing to 0 mod 2
    for (int j = 0; j < nrows; ++j) {
        TrackedRow t{rows[j].mod2(), BitVec::unit(j)};
        for (const TrackedRow& r : reduced)
            if (t.value.get(r.value.lowest())) {
                t.value ^= r.value;
                t.coeffs ^= r.coeffs;
            }
        if (t.value.is_zero())
            kernel_coeffs.push_back(t.coeffs);
        else
            reduced.push_back(t);
    }

    auto z4_sum = [&](const BitVec& coeffs) {
        Z4Vec s;
        for (int j = 0; j < nrows; ++j)
            if (coeffs.get(j)) s += rows[j];
        return s;
    };

    Z4Code c;
    c.n_ = n;
    {
        std::vector<BitVec> rrows, trows;
        for (const TrackedRow& r : reduced) rrows.push_back(r.value);
        c.residue_ = BinaryCode::from_rows(n, rrows);
        trows = rrows;
        for (const BitVec& kc : kernel_coeffs) {
            Z4Vec even = z4_sum(kc);
            if (!even.all_even()) throw std::logic_error("Z4Code: kernel sum not even");
            trows.push_back(even.halved());
        }
        c.torsion_ = BinaryCode::from_rows(n, trows);
    }

    // gen4: one row per residue RREF row, even part reduced modulo torsion.
    for (size_t i = 0; i < c.residue_.basis().size(); ++i) {
        const BitVec& r = c.residue_.basis()[i];
        // express r in the echelon rows, then lift with the tracked sums
        BitVec rem = r, coeffs;
        for (const TrackedRow& tr : reduced)
            if (rem.get(tr.value.lowest())) {
                rem ^= tr.value;
                coeffs ^= tr.coeffs;
            }
        if (!rem.is_zero()) throw std::logic_error("Z4Code: residue re-expression failed");
        Z4Vec lifted = z4_sum(coeffs);
        BitVec s = reduce_mod(c.torsion_, (lifted - Z4Vec::lift(r, n)).halved());
        c.gen4_.push_back(Z4Vec::lift(r, n) + Z4Vec::lift(s, n).doubled());
    }
    // gen2: doubled torsion RREF rows at non-residue pivots.
    {
        std::vector<bool> rpiv(n, false);
        for (int p : c.residue_.pivots()) rpiv[p] = true;
        for (size_t i = 0; i < c.torsion_.basis().size(); ++i)
            if (!rpiv[c.torsion_.pivots()[i]])
                c.gen2_.push_back(Z4Vec::lift(c.torsion_.basis()[i], n).doubled());
    }
    return c;
}

std::vector<Z4Vec> Z4Code::generators() const {
    std::vector<Z4Vec> g = gen4_;
    g.insert(g.end(), gen2_.begin(), gen2_.end());
    return g;
}

bool Z4Code::contains(const Z4Vec& v) const {
    Z4Vec r = v;
    for (int i = 0; i < k1(); ++i) r -= scaled(gen4_[i], r.get(residue_.pivots()[i]));
    if (r.has_unit()) return false;
    return torsion_.contains(r.halved());
}

Z4Code Z4Code::dual() const {
    std::vector<Z4Vec> rows;
    BinaryCode tperp = torsion_.dual();
    for (const BitVec& u : tperp.basis()) {
        Z4Vec lifted = Z4Vec::lift(u, n_);
        BitVec v;
        for (int i = 0; i < k1(); ++i) {
            int ip = lifted.dot4(gen4_[i]);
            if (ip & 1) throw std::logic_error("Z4Code::dual: odd inner product");
            if (ip == 2) v.set(residue_.pivots()[i], true);
        }
        rows.push_back(lifted + Z4Vec::lift(v, n_).doubled());
    }
    BinaryCode rperp = residue_.dual();
    for (const BitVec& w : rperp.basis()) rows.push_back(Z4Vec::lift(w, n_).doubled());
    Z4Code d = from_rows(n_, rows);
    if (d.log2_size() + log2_size() != 2 * n_)
        throw std::logic_error("Z4Code::dual: size identity failed");
    return d;
}

bool Z4Code::is_self_dual() const { return dual() == *this; }

bool Z4Code::is_type2() const {
    if (log2_size() != n_) return false;
    std::vector<Z4Vec> gens = generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].euclidean_weight() % 8) return false;
        for (size_t j = i; j < gens.size(); ++j)
            if (gens[i].dot4(gens[j]) != 0) return false;
    }
    return is_self_dual();
}

bool Z4Code::is_type2_exhaustive() const {
    if (log2_size() != n_) return false;
    std::vector<Z4Vec> gens = generators();
    bool ok = true;
    for_each_codeword([&](const Z4Vec& w) {
        if (w.euclidean_weight() % 8) ok = false;
        for (const Z4Vec& g : gens)
            if (w.dot4(g) != 0) ok = false;
    });
    return ok;
}

int Z4Code::min_euclidean_weight(int early_below) const {
    std::vector<Z4Vec> steps;
    for (const Z4Vec& g : gen4_) steps.push_back(g);
    for (const Z4Vec& g : gen4_) steps.push_back(g.doubled());
    for (const Z4Vec& g : gen2_) steps.push_back(g);
    int k = static_cast<int>(steps.size());
    if (k == 0) throw std::invalid_argument("min_euclidean_weight of the zero code");
    if (k > 26) throw std::runtime_error("Z4 codeword enumeration budget exceeded");
    int best = INT32_MAX;
    Z4Vec cur;
    uint64_t total = uint64_t{1} << k;
    for (uint64_t s = 1; s < total; ++s) {
        cur += steps[std::countr_zero(s)];
        int w = cur.euclidean_weight();
        if (w && w < best) {
            best = w;
            if (best < early_below) return best;
        }
    }
    return best;
}

bool Z4Code::is_extremal() const {
    int bound = 8 * (n_ / 24) + 8;
    if (!is_type2()) return false;
    return min_euclidean_weight(bound) == bound;
}

Z4Code Z4Code::apply_monomial(const MonomialMap& m) const {
    std::vector<Z4Vec> rows;
    for (const Z4Vec& g : generators()) {
        Z4Vec img;
        for (int i = 0; i < n_; ++i) {
            int e = g.get(i);
            if (m.signs.get(i)) e = (4 - e) & 3;
            img.set(m.perm(i), e);
        }
        rows.push_back(img);
    }
    return from_rows(n_, rows);
}

uint64_t Z4Code::hash() const {
    uint64_t h = 0x452821e638d01377ull ^ static_cast<uint64_t>(n_);
    for (const Z4Vec& g : gen4_) h = h * 0x100000001b3ull ^ g.hash();
    h ^= 0xdeadbeefcafef00dull;
    for (const Z4Vec& g : gen2_) h = h * 0x100000001b3ull ^ g.hash();
    return h;
}

void Z4Code::write(std::ostream& os) const {
    os << "z4 " << n_ << ' ' << k1() << ' ' << k2() << '\n';
    for (const Z4Vec& g : gen4_) os << g.to_string(n_) << '\n';
    for (const Z4Vec& g : gen2_) os << g.to_string(n_) << '\n';
}

Z4Code Z4Code::read(std::istream& is) {
    std::string tag;
    int n = 0, a = 0, b = 0;
    if (!(is >> tag >> n >> a >> b) || tag != "z4")
        throw std::invalid_argument("expected 'z4 <n> <k1> <k2>' header");
    if (n < 1 || n > 64 || a < 0 || b < 0 || 2 * a + b > 2 * n)
        throw std::invalid_argument("bad z4 code header");
    std::vector<Z4Vec> rows;
    for (int i = 0; i < a + b; ++i) {
        std::string line;
        if (!(is >> line) || static_cast<int>(line.size()) != n)
            throw std::invalid_argument("bad z4 code row");
        for (char ch : line)
            if (ch < '0' || ch > '3') throw std::invalid_argument("bad z4 code row");
        rows.push_back(Z4Vec::from_string(line));
    }
    Z4Code c = from_rows(n, rows);
    if (c.k1() != a || c.k2() != b)
        throw std::invalid_argument("z4 code rows do not have the declared row orders");
    return c;
}

}  // namespace z4wb
