#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "z4wb/named_codes.hpp"
#include "z4wb/refdata.hpp"
#include "z4wb/z4_code.hpp"

using namespace z4wb;

namespace {

Z4Vec random_vec(std::mt19937& rng, int n) {
    Z4Vec v;
    for (int i = 0; i < n; ++i) v.set(i, rng() & 3);
    return v;
}

Z4Code random_code(std::mt19937& rng, int n, int rows) {
    std::vector<Z4Vec> rs;
    for (int r = 0; r < rows; ++r) rs.push_back(random_vec(rng, n));
    return Z4Code::from_rows(n, rs);
}

// Known small self-dual codes for the randomized Type II suite.
Z4Code klemm4() {
    return Z4Code::from_rows(
        4, {Z4Vec::from_string("1111"), Z4Vec::from_string("0220"), Z4Vec::from_string("0022")});
}

Z4Code octacode() {
    return Z4Code::from_rows(8, {Z4Vec::from_string("10002111"), Z4Vec::from_string("01003213"),
                                 Z4Vec::from_string("00103321"), Z4Vec::from_string("00013132")});
}

Z4Code two_block() { return Z4Code::from_rows(1, {Z4Vec::from_string("2")}); }

Z4Code direct_sum(const Z4Code& a, const Z4Code& b) {
    std::vector<Z4Vec> rows;
    for (const Z4Vec& g : a.generators()) rows.push_back(g);
    for (const Z4Vec& g : b.generators()) {
        Z4Vec shifted;
        for (int i = 0; i < b.length(); ++i) shifted.set(a.length() + i, g.get(i));
        rows.push_back(shifted);
    }
    return Z4Code::from_rows(a.length() + b.length(), rows);
}

MonomialMap random_monomial(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    BitVec signs;
    for (int i = 0; i < n; ++i)
        if (rng() & 1) signs.set(i, true);
    return {Permutation(img), signs};
}

// Random self-dual code of length <= max_n: direct sum of known self-dual
// blocks under a random monomial map.
Z4Code random_self_dual(std::mt19937& rng, int max_n) {
    Z4Code c = (rng() & 1) ? klemm4() : octacode();
    while (true) {
        int room = max_n - c.length();
        if (room < 1) break;
        int pick = rng() % 4;
        if (pick == 0) break;
        if (pick == 1)
            c = direct_sum(c, two_block());
        else if (pick == 2 && room >= 4)
            c = direct_sum(c, klemm4());
        else if (pick == 3 && room >= 8)
            c = direct_sum(c, octacode());
        else
            break;
    }
    return c.apply_monomial(random_monomial(rng, c.length()));
}

}  // namespace

TEST_CASE("Z4Vec arithmetic against per-coordinate oracle") {
    std::mt19937 rng(3);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + rng() % 24;
        Z4Vec a = random_vec(rng, n), b = random_vec(rng, n);
        Z4Vec sum = a + b, diff = a - b, neg = -a, dbl = a.doubled();
        int euc = 0, dot = 0;
        for (int i = 0; i < n; ++i) {
            int x = a.get(i), y = b.get(i);
            CHECK(sum.get(i) == ((x + y) & 3));
            CHECK(diff.get(i) == ((x - y + 4) & 3));
            CHECK(neg.get(i) == ((4 - x) & 3));
            CHECK(dbl.get(i) == ((2 * x) & 3));
            euc += std::min(x * x, (4 - x) * (4 - x));
            dot += x * y;
        }
        CHECK(a.euclidean_weight() == euc);
        CHECK(a.dot4(b) == (dot & 3));
        for (int i = 0; i < n; ++i) CHECK(a.mod2().get(i) == (a.get(i) & 1));
    }
}

TEST_CASE("standard form shapes") {
    CHECK(refdata::natural_code().k1() == 6);
    CHECK(refdata::natural_code().k2() == 12);
    CHECK(refdata::natural_code().log2_size() == 24);
    CHECK(refdata::self_dual_residue_codes()[0].second.k1() == 12);
    CHECK(refdata::self_dual_residue_codes()[0].second.k2() == 0);
    Z4Code two = Z4Code::from_rows(4, {Z4Vec::from_string("2222")});
    CHECK(two.k1() == 0);
    CHECK(two.k2() == 1);
}

TEST_CASE("standard form is independent of the generating rows") {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + rng() % 14;
        Z4Code c = random_code(rng, n, 1 + rng() % (n + 2));
        // random Z4-combinations of the generators re-span the same code
        std::vector<Z4Vec> gens = c.generators();
        std::vector<Z4Vec> rows;
        for (int r = 0; r < static_cast<int>(gens.size()) + 3; ++r) {
            Z4Vec v;
            for (const Z4Vec& g : gens) v += scaled(g, rng() & 3);
            rows.push_back(v);
        }
        Z4Code d = Z4Code::from_rows(n, rows);
        if (d.log2_size() == c.log2_size()) CHECK(d == c);
        bool all_in = true;
        for (const Z4Vec& v : rows) all_in = all_in && c.contains(v);
        CHECK(all_in);
    }
}

TEST_CASE("residue and torsion") {
    const Z4Code& nat = refdata::natural_code();
    CHECK(nat.residue().dim() == 6);
    CHECK(nat.torsion().dim() == 18);
    CHECK(nat.torsion() == nat.residue().dual());
    CHECK(nat.residue().satisfies_residue_conditions());
    // torsion of an all-order-2 code; residue is zero
    BinaryCode g = named_code("g24");
    std::vector<Z4Vec> rows;
    for (const BitVec& b : g.basis()) rows.push_back(Z4Vec::lift(b, 24).doubled());
    Z4Code doubled = Z4Code::from_rows(24, rows);
    CHECK(doubled.residue().dim() == 0);
    CHECK(doubled.torsion() == g);
    CHECK(doubled.min_euclidean_weight() == 32);
}

TEST_CASE("duality involution and orthogonality on random codes") {
    std::mt19937 rng(29);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + rng() % 14;
        Z4Code c = random_code(rng, n, 1 + rng() % (n + 1));
        Z4Code d = c.dual();
        CHECK(c.log2_size() + d.log2_size() == 2 * n);
        for (const Z4Vec& a : c.generators())
            for (const Z4Vec& b : d.generators()) CHECK(a.dot4(b) == 0);
        CHECK(d.dual() == c);
    }
}

TEST_CASE("Type II generator check vs exhaustive check") {
    std::mt19937 rng(31);
    int type2_seen = 0, plain_seen = 0;
    for (int t = 0; t < 100; ++t) {
        Z4Code c = random_self_dual(rng, 16);
        CHECK(c.is_self_dual());
        bool quick = c.is_type2();
        CHECK(quick == c.is_type2_exhaustive());
        (quick ? type2_seen : plain_seen)++;
    }
    CHECK(type2_seen > 0);   // pure octacode sums are Type II
    CHECK(plain_seen > 0);   // any Klemm or (2) block breaks divisibility by 8
    // non-self-dual code rejected by both
    Z4Code line = Z4Code::from_rows(4, {Z4Vec::from_string("1000")});
    CHECK_FALSE(line.is_type2());
    CHECK_FALSE(line.is_type2_exhaustive());
}

TEST_CASE("euclidean weight examples") {
    CHECK(Z4Vec::from_string("1230").euclidean_weight() == 6);
    CHECK(Z4Vec().euclidean_weight() == 0);
    CHECK(Z4Vec::from_string("2222").euclidean_weight() == 16);
}

TEST_CASE("extremality of the reference codes") {
    const Z4Code& nat = refdata::natural_code();
    CHECK(nat.is_type2());
    CHECK(nat.min_euclidean_weight() == 16);
    CHECK(nat.is_extremal());
    CHECK(octacode().is_extremal());  // bound is 8 at length 8
    CHECK_FALSE(klemm4().is_extremal());
    for (const auto& [label, code] : refdata::self_dual_residue_codes()) {
        CAPTURE(label);
        CHECK(code.is_type2());
        CHECK(code.min_euclidean_weight(16) == 16);
        CHECK(code.residue().dim() == 12);
        CHECK(code.residue().dual() == code.residue());
        CHECK(code.residue().satisfies_residue_conditions());
    }
}

TEST_CASE("monomial maps preserve the Euclidean geometry") {
    std::mt19937 rng(41);
    Z4Code oct = octacode();
    MonomialMap id{Permutation::identity(8), BitVec()};
    CHECK(oct.apply_monomial(id) == oct);
    for (int t = 0; t < 20; ++t) {
        MonomialMap m = random_monomial(rng, 8);
        Z4Code img = oct.apply_monomial(m);
        CHECK(img.is_extremal());
        CHECK(img.min_euclidean_weight() == oct.min_euclidean_weight());
    }
    // global sign change fixes any code
    MonomialMap allneg{Permutation::identity(8), BitVec::ones(8)};
    CHECK(oct.apply_monomial(allneg) == oct);
}

TEST_CASE("z4 text round trip") {
    std::stringstream ss;
    refdata::natural_code().write(ss);
    CHECK(Z4Code::read(ss) == refdata::natural_code());
    std::stringstream bad("z4 4 1 0\n0140\n");
    CHECK_THROWS(Z4Code::read(bad));
    std::stringstream wrong_shape("z4 4 0 1\n1111\n");
    CHECK_THROWS(Z4Code::read(wrong_shape));
}
