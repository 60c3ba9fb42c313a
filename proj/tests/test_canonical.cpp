#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "z4wb/canonical.hpp"
#include "z4wb/named_codes.hpp"

using namespace z4wb;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("permutation algebra") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        Permutation a = random_perm(rng, 24), b = random_perm(rng, 24);
        Permutation c = a.then(b);
        for (int i = 0; i < 24; ++i) CHECK(c(i) == b(a(i)));
        CHECK(a.then(a.inverse()).is_identity());
    }
}

TEST_CASE("group_order on known groups") {
    // S_4 from a transposition and a 4-cycle.
    Permutation t({1, 0, 2, 3});
    Permutation c({1, 2, 3, 0});
    CHECK(group_order({t, c}, 4) == 24);
    // Cyclic group of order 7.
    std::vector<int> img(7);
    for (int i = 0; i < 7; ++i) img[i] = (i + 1) % 7;
    CHECK(group_order({Permutation(img)}, 7) == 7);
    CHECK(group_order({}, 5) == 1);
}

TEST_CASE("canonical form is permutation invariant") {
    std::mt19937 rng(23);
    for (const auto& label : self_dual24_labels()) {
        CAPTURE(label);
        BinaryCode c = named_code(label);
        CanonicalCertificate base = canonical_form(c);
        CHECK(c.permuted(base.witness.images()) == base.canonical);
        for (int t = 0; t < 4; ++t) {
            Permutation p = random_perm(rng, 24);
            CanonicalCertificate cert = canonical_form(c.permuted(p.images()));
            CHECK(cert.canonical == base.canonical);
        }
    }
}

TEST_CASE("the nine self-dual codes are pairwise inequivalent") {
    std::set<std::vector<BitVec>> forms;
    auto key = [](const BinaryCode& c) { return c.basis(); };
    struct Cmp {};
    std::vector<BinaryCode> canon;
    for (const auto& label : self_dual24_labels())
        canon.push_back(canonical_form(named_code(label)).canonical);
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = i + 1; j < canon.size(); ++j) CHECK_FALSE(canon[i] == canon[j]);
    (void)key;
}

TEST_CASE("automorphism group orders") {
    // Repetition code: full symmetric group.
    BinaryCode rep = BinaryCode::from_rows(8, {BitVec::ones(8)});
    unsigned __int128 fact8 = 1;
    for (int i = 2; i <= 8; ++i) fact8 *= i;
    CHECK(canonical_form(rep).aut_order == fact8);

    // Hamming [7,4]: |Aut| = 168.
    BinaryCode ham = named_code("e7").dual();
    CHECK(ham.dim() == 4);
    CHECK(canonical_form(ham).aut_order == 168);

    // e8: |Aut| = 1344.
    CHECK(canonical_form(named_code("e8")).aut_order == 1344);

    // Golay: |M24| = 244823040.
    CHECK(canonical_form(named_code("g24")).aut_order == 244823040);
}

TEST_CASE("are_equivalent returns a valid witness") {
    std::mt19937 rng(5);
    BinaryCode g = named_code("g24");
    for (int t = 0; t < 5; ++t) {
        Permutation p = random_perm(rng, 24);
        BinaryCode h = g.permuted(p.images());
        auto w = are_equivalent(g, h);
        REQUIRE(w.has_value());
        CHECK(g.permuted(w->images()) == h);
    }
    CHECK_FALSE(are_equivalent(g, named_code("d24")).has_value());
}
