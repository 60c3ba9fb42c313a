#include "z4wb/named_codes.hpp"

#include <map>

namespace z4wb {

namespace {

BitVec vec_at(std::initializer_list<int> ones, int offset) {
    BitVec v;
    for (int i : ones) v.set(offset + i, true);
    return v;
}

BinaryCode merge(const BinaryCode& a, const BinaryCode& b) {
    std::vector<BitVec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return BinaryCode::from_rows(a.length(), rows);
}

bool is_self_orthogonal(const BinaryCode& c) {
    for (const BitVec& a : c.basis())
        for (const BitVec& b : c.basis())
            if (a.dot(b)) return false;
    return true;
}

}  // namespace

BinaryCode d_component(int m, int offset, int n) {
    std::vector<BitVec> rows;
    for (int i = 0; i + 4 <= m; i += 2) rows.push_back(vec_at({i, i + 1, i + 2, i + 3}, offset));
    return BinaryCode::from_rows(n, rows);
}

BinaryCode e7_component(int offset, int n) {
    // simplex [7,3,4]: row space of the Hamming parity-check matrix
    std::vector<BitVec> rows;
    for (int b = 0; b < 3; ++b) {
        BitVec v;
        for (int c = 1; c <= 7; ++c)
            if ((c >> b) & 1) v.set(offset + c - 1, true);
        rows.push_back(v);
    }
    return BinaryCode::from_rows(n, rows);
}

BinaryCode e8_component(int offset, int n) {
    std::vector<BitVec> rows = {
        vec_at({0, 1, 2, 3}, offset),
        vec_at({2, 3, 4, 5}, offset),
        vec_at({4, 5, 6, 7}, offset),
        vec_at({0, 2, 4, 6}, offset),
    };
    return BinaryCode::from_rows(n, rows);
}

BinaryCode complete_self_dual(const BinaryCode& K) {
    int n = K.length();
    if (n % 2) throw std::invalid_argument("complete_self_dual: odd length");
    if (!is_self_orthogonal(K) || !K.is_doubly_even())
        throw std::invalid_argument("complete_self_dual: K must be doubly even self-orthogonal");
    BinaryCode perp = K.dual();
    if (perp.dim() > 28)
        throw std::runtime_error("complete_self_dual: dual too large to enumerate");

    // DFS over glue vectors from K-perp
    struct Ctx {
        int target;
        const BinaryCode* perp;
        bool run(BinaryCode cur) {
            if (cur.dim() == target) {
                result = cur;
                return true;
            }
            // Gray traversal of the dual
            BitVec v;
            uint64_t total = uint64_t{1} << perp->dim();
            for (uint64_t s = 1; s < total; ++s) {
                v ^= perp->basis()[std::countr_zero(s)];
                if (v.weight() % 4) continue;
                if (cur.contains(v)) continue;
                bool orth = true;
                for (const BitVec& b : cur.basis())
                    if (v.dot(b)) {
                        orth = false;
                        break;
                    }
                if (!orth) continue;
                if (cur.coset_min_weight(v) < 8) continue;
                if (run(cur.span_with(v))) return true;
            }
            return false;
        }
        BinaryCode result;
    } ctx;
    ctx.target = n / 2;
    ctx.perp = &perp;
    if (!ctx.run(K)) throw std::runtime_error("complete_self_dual: no completion found");
    return ctx.result;
}

BinaryCode named_code(const std::string& label) {
    static std::map<std::string, BinaryCode> cache;
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;

    BinaryCode c;
    if (label == "e6_parity") {
        std::vector<BitVec> rows;
        for (int i = 0; i < 5; ++i) rows.push_back(vec_at({i, i + 1}, 0));
        c = BinaryCode::from_rows(6, rows);
    } else if (label == "e7") {
        c = e7_component(0, 7);
    } else if (label == "e8") {
        c = e8_component(0, 8);
    } else if (label == "d16plus") {
        c = complete_self_dual(d_component(16, 0, 16));
    } else if (label == "M12_bordered") {
        // bordered double circulant on a 5-cycle
        std::vector<BitVec> rows;
        rows.push_back(vec_at({0, 7, 8, 9, 10, 11}, 0));
        for (int i = 0; i < 5; ++i) {
            BitVec v;
            v.set(1 + i, true);
            v.set(6, true);
            v.set(7 + ((i + 1) % 5), true);  // 5-cycle adjacency
            v.set(7 + ((i + 4) % 5), true);
            rows.push_back(v);
        }
        c = BinaryCode::from_rows(12, rows);
    } else if (label == "C7_1") {
        std::vector<BitVec> rows;
        for (int i = 0; i < 5; ++i) {
            BitVec v;
            for (int blk = 0; blk < 4; ++blk) {
                v.set(6 * blk + i, true);
                v.set(6 * blk + i + 1, true);
            }
            rows.push_back(v);
        }
        BitVec g1, g2;
        for (int i = 0; i < 12; ++i) g1.set(i, true);          // blocks 1,2
        for (int i = 0; i < 6; ++i) g2.set(i, true);           // blocks 1,3
        for (int i = 12; i < 18; ++i) g2.set(i, true);
        rows.push_back(g1);
        rows.push_back(g2);
        c = BinaryCode::from_rows(24, rows);
    } else if (label == "C7_2") {
        BinaryCode m12 = named_code("M12_bordered");
        std::vector<BitVec> rows;
        BitVec top;
        for (int i = 0; i < 12; ++i) top.set(i, true);
        rows.push_back(top);
        for (const BitVec& r : m12.basis()) {
            BitVec v;
            for (int i = 0; i < 12; ++i)
                if (r.get(i)) {
                    v.set(i, true);
                    v.set(12 + i, true);
                }
            rows.push_back(v);
        }
        c = BinaryCode::from_rows(24, rows);
    } else if (label == "g24") {
        // [I12 | B], B the bordered circulant over the quadratic residues mod 11
        bool qr[11] = {};
        for (int x = 1; x < 11; ++x) qr[(x * x) % 11] = true;
        std::vector<BitVec> rows;
        {
            BitVec v;  // border row: identity bit 0 plus the all-one tail
            v.set(0, true);
            for (int j = 1; j < 12; ++j) v.set(12 + j, true);
            rows.push_back(v);
        }
        for (int i = 0; i < 11; ++i) {
            BitVec v;
            v.set(1 + i, true);
            v.set(12, true);  // border column
            for (int j = 0; j < 11; ++j)
                if (j == 0 || qr[j]) v.set(13 + ((j + i) % 11), true);
            rows.push_back(v);
        }
        c = BinaryCode::from_rows(24, rows);
    } else {
        // the eight non-Golay self-dual codes: components + glue search
        BinaryCode k = BinaryCode::zero(24);
        if (label == "d12^2") {
            for (int off : {0, 12}) k = merge(k, d_component(12, off, 24));
        } else if (label == "d10e7^2") {
            k = d_component(10, 0, 24);
            k = merge(k, e7_component(10, 24));
            k = merge(k, e7_component(17, 24));
        } else if (label == "d8^3") {
            for (int off : {0, 8, 16}) k = merge(k, d_component(8, off, 24));
        } else if (label == "d6^4") {
            for (int off : {0, 6, 12, 18}) k = merge(k, d_component(6, off, 24));
        } else if (label == "d24") {
            k = d_component(24, 0, 24);
        } else if (label == "d4^6") {
            for (int off = 0; off < 24; off += 4) k = merge(k, d_component(4, off, 24));
        } else if (label == "e8^3") {
            for (int off : {0, 8, 16}) k = merge(k, e8_component(off, 24));
        } else if (label == "d16e8") {
            k = merge(d_component(16, 0, 24), e8_component(16, 24));
        } else {
            throw std::invalid_argument("named_code: unknown label '" + label + "'");
        }
        c = complete_self_dual(k);
    }
    cache.emplace(label, c);
    return c;
}

const std::vector<std::string>& self_dual24_labels() {
    static const std::vector<std::string> labels = {
        "g24", "d12^2", "d10e7^2", "d8^3", "d6^4", "d24", "d4^6", "e8^3", "d16e8"};
    return labels;
}

}  // namespace z4wb
