#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "z4wb/neighbor.hpp"
#include "z4wb/refdata.hpp"

using namespace z4wb;

namespace {

// all weight-4 vectors a with a not in residue(c) and <residue(c), a> doubly even
std::vector<BitVec> augmentable_vectors(const Z4Code& c) {
    int n = c.length();
    std::vector<BitVec> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    BitVec a;
                    a.flip(i); a.flip(j); a.flip(k); a.flip(l);
                    if (c.residue().contains(a)) continue;
                    if (!c.residue().span_with(a).is_doubly_even()) continue;
                    out.push_back(a);
                }
    return out;
}

std::vector<BitVec> weight4_codewords(const BinaryCode& code) {
    std::vector<BitVec> out;
    int k = code.dim();
    for (uint64_t m = 1; m < (uint64_t(1) << k); ++m) {
        BitVec v;
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1) v = v ^ code.basis()[i];
        if (v.weight() == 4) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("weight-4 augmentation raises the residue dimension by one") {
    Z4Code base = refdata::natural_code();
    auto cands = augmentable_vectors(base);
    REQUIRE(!cands.empty());
    BitVec a = cands.front();

    auto [out, w] = augment_extremal(base, a);
    CHECK(out.is_extremal());
    CHECK(out.residue().dim() == base.residue().dim() + 1);
    CHECK(out.residue() == base.residue().span_with(a));

    CHECK(w.a == a);
    CHECK(w.alpha.mod2() == a);
    CHECK(w.glue.mod2() == a);
    CHECK(a.dot(w.b) == 1);
    CHECK(base.torsion().contains(w.b));
    CHECK(!base.residue().contains(w.b));
    CHECK(w.glue == w.alpha + w.beta.doubled());
    CHECK(out.contains(w.glue));
    CHECK(!base.contains(w.glue));
}

TEST_CASE("augmentation preconditions are enforced") {
    Z4Code base = refdata::natural_code();

    BitVec w8;
    for (int i = 0; i < 8; ++i) w8.flip(i);
    w8 = BitVec();
    // a weight-8 vector: reject on weight alone
    for (int i : {0, 1, 2, 3, 4, 5, 6, 7}) w8.flip(i);
    CHECK_THROWS_AS((void)augment_extremal(base, w8), std::invalid_argument);

    // a residue codeword: reject (natural code residue has min weight 8,
    // so take any nonzero codeword)
    auto res = base.residue();
    BitVec in_res = res.basis().front();
    CHECK(in_res.weight() >= 8);
    CHECK_THROWS_AS((void)augment_extremal(base, in_res), std::invalid_argument);

    // a weight-4 vector whose span with the residue is not doubly even
    bool found = false;
    for (int i = 3; i < base.length() && !found; ++i) {
        BitVec a;
        a.flip(0); a.flip(1); a.flip(2); a.flip(i);
        if (res.contains(a)) continue;
        if (!res.span_with(a).is_doubly_even()) {
            CHECK_THROWS_AS((void)augment_extremal(base, a), std::invalid_argument);
            found = true;
        }
    }
    CHECK(found);

    // non-extremal input
    Z4Code tiny = Z4Code::from_rows(24, {Z4Vec::from_string("222200000000000000000000")});
    BitVec a4;
    for (int i : {0, 1, 2, 3}) a4.flip(i);
    CHECK_THROWS_AS((void)augment_extremal(tiny, a4), std::invalid_argument);
}

TEST_CASE("deaugmentation preconditions are enforced") {
    Z4Code base = refdata::natural_code();
    auto cands = augmentable_vectors(base);
    auto [up, w] = augment_extremal(base, cands.front());

    BitVec w8;
    for (int i = 0; i < 8; ++i) w8.flip(i);
    CHECK_THROWS_AS((void)deaugment_extremal(up, w8), std::invalid_argument);

    // weight-4 vector not in the residue
    bool found = false;
    for (const BitVec& a : cands)
        if (!up.residue().contains(a)) {
            CHECK_THROWS_AS((void)deaugment_extremal(up, a), std::invalid_argument);
            found = true;
            break;
        }
    CHECK(found);
}

TEST_CASE("deaugmentation drops the residue dimension by one") {
    Z4Code base = refdata::natural_code();
    auto cands = augmentable_vectors(base);
    BitVec a = cands.front();
    auto [up, wa] = augment_extremal(base, a);

    auto [down, w] = deaugment_extremal(up, a);
    CHECK(down.is_extremal());
    CHECK(down.residue().dim() == up.residue().dim() - 1);
    CHECK(down == base);

    CHECK(w.a == a);
    CHECK(w.alpha.mod2() == a);
    CHECK(w.alpha_prime.mod2() == a);
    CHECK(w.alpha.dot4(w.alpha_prime) == 2);
    CHECK(a.dot(w.c) == 1);
    CHECK(w.glue == w.alpha - w.alpha_prime);
    CHECK(down.contains(w.glue));
    CHECK(down.residue().span_with(a) == up.residue());
}

TEST_CASE("augment/deaugment round trips restore the code") {
    Z4Code base = refdata::natural_code();
    auto cands = augmentable_vectors(base);
    REQUIRE(cands.size() >= 25);
    std::mt19937_64 rng(20240817);
    std::shuffle(cands.begin(), cands.end(), rng);
    for (size_t t = 0; t < 25; ++t) {
        const BitVec& a = cands[t];
        auto [up, wa] = augment_extremal(base, a);
        auto [down, wd] = deaugment_extremal(up, a);
        CHECK(down == base);
    }
}

TEST_CASE("neighbors share exactly half their codewords") {
    Z4Code base = refdata::natural_code();
    auto cands = augmentable_vectors(base);
    auto [out, w] = augment_extremal(base, cands.front());

    uint64_t shared = 0;
    base.for_each_codeword([&](const Z4Vec& v) {
        if (out.contains(v)) ++shared;
    });
    CHECK(shared == (uint64_t(1) << (base.log2_size() - 1)));
}

TEST_CASE("deaugmentation from a code with weight-4 residue words") {
    Z4Code c;
    for (const auto& [name, code] : refdata::self_dual_residue_codes())
        if (name == "d4^6") c = code;
    REQUIRE(c.is_extremal());
    auto w4 = weight4_codewords(c.residue());
    REQUIRE(!w4.empty());
    std::mt19937_64 rng(7);
    std::shuffle(w4.begin(), w4.end(), rng);
    size_t trials = std::min<size_t>(10, w4.size());
    for (size_t t = 0; t < trials; ++t) {
        const BitVec& a = w4[t];
        auto [down, w] = deaugment_extremal(c, a);
        CHECK(down.is_extremal());
        CHECK(down.residue().dim() == c.residue().dim() - 1);
        CHECK(down.residue().span_with(a) == c.residue());
    }
}
