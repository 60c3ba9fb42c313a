#include "z4wb/binary_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace z4wb {

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
}

BinaryCode BinaryCode::from_rows(int n, const std::vector<BitVec>& rows) {
    if (n < 0 || n > 128) throw std::invalid_argument("BinaryCode: length out of range");
    BinaryCode c;
    c.n_ = n;
    for (BitVec v : rows) {
        for (size_t i = 0; i < c.basis_.size(); ++i)
            if (v.get(c.pivots_[i])) v ^= c.basis_[i];
        int p = v.lowest();
        if (p < 0) continue;
        if (p >= n) throw std::invalid_argument("BinaryCode: row longer than code length");
        // clear the new pivot column in existing rows
        for (size_t i = 0; i < c.basis_.size(); ++i)
            if (c.basis_[i].get(p)) c.basis_[i] ^= v;
        size_t at = 0;
        while (at < c.pivots_.size() && c.pivots_[at] < p) ++at;
        c.basis_.insert(c.basis_.begin() + at, v);
        c.pivots_.insert(c.pivots_.begin() + at, p);
    }
    return c;
}

bool BinaryCode::contains(const BitVec& v) const {
    BitVec r = v;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (r.get(pivots_[i])) r ^= basis_[i];
    return r.is_zero();
}

std::optional<BitVec> BinaryCode::coefficients(const BitVec& v) const {
    BitVec r = v, coeff;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (r.get(pivots_[i])) {
            r ^= basis_[i];
            coeff.set(static_cast<int>(i), true);
        }
    if (!r.is_zero()) return std::nullopt;
    return coeff;
}

BinaryCode BinaryCode::dual() const {
    std::vector<bool> is_pivot(n_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<BitVec> rows;
    for (int f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        BitVec v = BitVec::unit(f);
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].get(f)) v.set(pivots_[i], true);
        rows.push_back(v);
    }
    return from_rows(n_, rows);
}

BinaryCode BinaryCode::span_with(const BitVec& v) const {
    std::vector<BitVec> rows = basis_;
    rows.push_back(v);
    return from_rows(n_, rows);
}

BinaryCode BinaryCode::direct_sum(const BinaryCode& other) const {
    int n = n_ + other.n_;
    if (n > 128) throw std::invalid_argument("direct_sum: combined length out of range");
    std::vector<BitVec> rows;
    for (const BitVec& b : basis_) rows.push_back(b);
    for (const BitVec& b : other.basis_) {
        BitVec v;
        for (int i = 0; i < other.n_; ++i)
            if (b.get(i)) v.set(n_ + i, true);
        rows.push_back(v);
    }
    return from_rows(n, rows);
}

BinaryCode BinaryCode::permuted(const std::vector<int>& images) const {
    std::vector<BitVec> rows;
    for (const BitVec& b : basis_) {
        BitVec v;
        for (int i = 0; i < n_; ++i)
            if (b.get(i)) v.set(images[i], true);
        rows.push_back(v);
    }
    return from_rows(n_, rows);
}

template <class F>
void BinaryCode::for_each_codeword(F&& f) const {
    int k = dim();
    if (k > 28) throw std::runtime_error("codeword enumeration budget exceeded (k > 28)");
    BitVec cur;
    f(cur);
    uint64_t total = uint64_t{1} << k;
    for (uint64_t s = 1; s < total; ++s) {
        cur ^= basis_[std::countr_zero(s)];
        f(cur);
    }
}

WeightDistribution BinaryCode::weight_distribution() const {
    WeightDistribution wd;
    wd.counts.assign(n_ + 1, 0);
    for_each_codeword([&](const BitVec& v) { ++wd.counts[v.weight()]; });
    return wd;
}

int BinaryCode::min_weight() const {
    if (dim() == 0) throw std::invalid_argument("min_weight of the zero code");
    int best = n_ + 1;
    for_each_codeword([&](const BitVec& v) {
        int w = v.weight();
        if (w && w < best) best = w;
    });
    return best;
}

int BinaryCode::divisibility() const {
    int div = 8;
    for_each_codeword([&](const BitVec& v) {
        int w = v.weight();
        while (w && (w % div)) div >>= 1;
    });
    return div;
}

int BinaryCode::coset_min_weight(const BitVec& v, BitVec* argmin) const {
    int best = 129;
    BitVec cur = v;
    auto visit = [&](const BitVec& x) {
        int w = x.weight();
        if (w < best) {
            best = w;
            if (argmin) *argmin = x;
        }
    };
    int k = dim();
    if (k > 28) throw std::runtime_error("coset enumeration budget exceeded (k > 28)");
    visit(cur);
    uint64_t total = uint64_t{1} << k;
    for (uint64_t s = 1; s < total; ++s) {
        cur ^= basis_[std::countr_zero(s)];
        visit(cur);
    }
    return best;
}

bool BinaryCode::satisfies_residue_conditions() const {
    if (dim() == 0) return false;
    if (!is_doubly_even()) return false;
    if (!contains(BitVec::ones(n_))) return false;
    BinaryCode d = dual();
    if (d.dim() > 0 && d.dim() <= 28) {
        if (d.min_weight() < 4) return false;
    } else if (d.dim() > 28) {
        // dual too large to enumerate: scan weight 1..3 vectors directly
        for (int i = 0; i < n_; ++i) {
            BitVec e = BitVec::unit(i);
            if (d.contains(e)) return false;
            for (int j = i + 1; j < n_; ++j) {
                BitVec e2 = e ^ BitVec::unit(j);
                if (d.contains(e2)) return false;
                for (int l = j + 1; l < n_; ++l)
                    if (d.contains(e2 ^ BitVec::unit(l))) return false;
            }
        }
    }
    return true;
}

uint64_t BinaryCode::hash() const {
    uint64_t h = 0x243f6a8885a308d3ull ^ (uint64_t)n_;
    for (const BitVec& b : basis_) h = h * 0x100000001b3ull ^ b.hash();
    return h;
}

void BinaryCode::write(std::ostream& os) const {
    os << "binary " << n_ << ' ' << dim() << '\n';
    for (const BitVec& b : basis_) os << b.to_string(n_) << '\n';
}

BinaryCode BinaryCode::read(std::istream& is) {
    std::string tag;
    int n = 0, k = 0;
    if (!(is >> tag >> n >> k) || tag != "binary")
        throw std::invalid_argument("expected 'binary <n> <k>' header");
    if (n < 1 || n > 128 || k < 0 || k > n)
        throw std::invalid_argument("bad binary code header");
    std::vector<BitVec> rows;
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!(is >> line) || static_cast<int>(line.size()) != n)
            throw std::invalid_argument("bad binary code row");
        for (char c : line)
            if (c != '0' && c != '1') throw std::invalid_argument("bad binary code row");
        rows.push_back(BitVec::from_string(line));
    }
    return from_rows(n, rows);
}

}  // namespace z4wb
