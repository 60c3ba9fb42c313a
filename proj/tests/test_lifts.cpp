#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "z4wb/lifts.hpp"
#include "z4wb/named_codes.hpp"
#include "z4wb/refdata.hpp"

using namespace z4wb;

namespace {

BinaryCode maximal_code(const std::string& name) {
    for (const auto& row : refdata::maximal_nonrealizable()) {
        if (row.name != name) continue;
        BinaryCode c = refdata::c6();
        for (const std::string& vn : row.vectors)
            c = c.span_with(refdata::nonrealizable_vector(vn));
        return c;
    }
    throw std::invalid_argument("unknown maximal code");
}

}  // namespace

TEST_CASE("base lift of C6 is Type II with the right residue and torsion") {
    const BinaryCode& c = refdata::c6();
    Z4Code lift = base_type2_lift(c);
    CHECK(lift.is_type2());
    CHECK(lift.residue() == c);
    CHECK(lift.torsion() == c.dual());
    CHECK(lift.log2_size() == 24);
}

TEST_CASE("base lift of g24 is Type II of size 2^24") {
    BinaryCode g = named_code("g24");
    Z4Code lift = base_type2_lift(g);
    CHECK(lift.is_type2());
    CHECK(lift.residue() == g);
    CHECK(lift.log2_size() == 24);
}

TEST_CASE("base lift rejects codes without the all-one vector") {
    // an even but not residue-eligible code
    BitVec v;
    for (int i : {0, 1, 2, 3}) v.flip(i);
    BinaryCode bad = BinaryCode::from_rows(24, {v});
    CHECK_THROWS_AS((void)base_type2_lift(bad), std::invalid_argument);
}

TEST_CASE("lift space of C6 has the predicted dimension and anchors at the base lift") {
    LiftSpace sp = build_lift_space(refdata::c6());
    CHECK(sp.m0() == sp.predicted_m0());
    CHECK(sp.m0() == 16);
    CHECK(sp.decode(0) == sp.base_lift());
    CHECK(sp.m() == sp.m0() - sp.negation_dim());
}

TEST_CASE("decoded points are Type II codes with the prescribed residue") {
    LiftSpace sp = build_lift_space(refdata::c6());
    std::mt19937_64 rng(11);
    uint64_t mask = (uint64_t{1} << sp.m()) - 1;
    for (int t = 0; t < 100; ++t) {
        Z4Code code = sp.decode(rng() & mask);
        CHECK(code.is_type2());
        CHECK(code.residue() == refdata::c6());
    }
}

TEST_CASE("column negations stay in the same quotient point") {
    LiftSpace sp = build_lift_space(refdata::c6());
    std::mt19937_64 rng(12);
    uint64_t mask = (uint64_t{1} << sp.m()) - 1;
    for (int t = 0; t < 20; ++t) {
        uint64_t p = rng() & mask;
        Z4Code code = sp.decode(p);
        CHECK(sp.encode(code) == p);
        int col = static_cast<int>(rng() % 24);
        MonomialMap neg{Permutation::identity(24), BitVec::unit(col)};
        CHECK(sp.encode(code.apply_monomial(neg)) == p);
    }
}

TEST_CASE("the automorphism action matches permuted decodes on random points") {
    LiftSpace sp = build_lift_space(refdata::c6());
    REQUIRE(!sp.aut_action().empty());
    std::mt19937_64 rng(13);
    uint64_t mask = (uint64_t{1} << sp.m()) - 1;
    for (int t = 0; t < 20; ++t) {
        uint64_t p = rng() & mask;
        size_t gi = rng() % sp.aut_action().size();
        MonomialMap mm{sp.aut_generators()[gi], BitVec()};
        CHECK(sp.encode(sp.decode(p).apply_monomial(mm)) == sp.aut_action()[gi](p));
    }
}

TEST_CASE("extremality is constant on orbits") {
    LiftSpace sp = build_lift_space(refdata::c6());
    auto orbits = enumerate_classes(sp);
    std::mt19937_64 rng(14);
    const Orbit& o = orbits[rng() % orbits.size()];
    // closure of the representative under the generators
    std::vector<uint64_t> pts{o.representative};
    std::vector<bool> seen(uint64_t{1} << sp.m(), false);
    seen[o.representative] = true;
    for (size_t i = 0; i < pts.size(); ++i)
        for (const AffineMap& a : sp.aut_action()) {
            uint64_t q = a(pts[i]);
            if (!seen[q]) {
                seen[q] = true;
                pts.push_back(q);
            }
        }
    CHECK(pts.size() == o.size);
    bool ex = sp.decode(o.representative).is_extremal();
    for (uint64_t p : pts) CHECK(sp.decode(p).is_extremal() == ex);
}

TEST_CASE("C6 is realizable with a unique extremal class") {
    RealizabilityVerdict v = decide_realizability(refdata::c6());
    CHECK(v.status == RealizabilityVerdict::Status::Realizable);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->is_extremal());
    CHECK(v.witness->residue() == refdata::c6());

    LiftSpace sp = build_lift_space(refdata::c6());
    auto orbits = enumerate_classes(sp);
    uint64_t total = 0;
    int extremal_classes = 0;
    for (const Orbit& o : orbits) {
        total += o.size;
        if (sp.decode(o.representative).is_extremal()) ++extremal_classes;
    }
    CHECK(total == uint64_t{1} << sp.m());
    CHECK(extremal_classes == 1);
}

TEST_CASE("N9_1 has quotient dimension 14 and 159 classes, none extremal") {
    BinaryCode c = maximal_code("N9_1");
    CHECK(c.dim() == 9);
    LiftSpace sp = build_lift_space(c);
    CHECK(sp.m() == 14);
    auto orbits = enumerate_classes(sp);
    CHECK(orbits.size() == 159);
    uint64_t total = 0;
    for (const Orbit& o : orbits) total += o.size;
    CHECK(total == uint64_t{1} << 14);

    RealizabilityVerdict v = decide_realizability(c);
    CHECK(v.status == RealizabilityVerdict::Status::NonRealizable);
    CHECK(v.classes_checked == 159);
    CHECK(v.exhaustive);
}
