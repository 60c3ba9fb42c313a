#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "z4wb/binary_code.hpp"
#include "z4wb/named_codes.hpp"

using namespace z4wb;

namespace {

// Independent oracle: weight distribution by naive re-expansion of every
// message vector (no Gray traversal, no shared code path).
std::vector<uint64_t> naive_weight_distribution(const BinaryCode& c) {
    std::vector<uint64_t> counts(c.length() + 1, 0);
    uint64_t total = uint64_t{1} << c.dim();
    for (uint64_t m = 0; m < total; ++m) {
        BitVec w;
        for (int i = 0; i < c.dim(); ++i)
            if ((m >> i) & 1) w ^= c.basis()[i];
        ++counts[w.weight()];
    }
    return counts;
}

BinaryCode random_code(std::mt19937& rng, int n, int rows) {
    std::vector<BitVec> rs;
    for (int r = 0; r < rows; ++r) {
        BitVec v;
        for (int i = 0; i < n; ++i)
            if (rng() & 1) v.set(i, true);
        rs.push_back(v);
    }
    return BinaryCode::from_rows(n, rs);
}

}  // namespace

TEST_CASE("from_rows basics") {
    BinaryCode rep = BinaryCode::from_rows(6, {BitVec::ones(6)});
    CHECK(rep.dim() == 1);
    BinaryCode zero = BinaryCode::from_rows(24, {BitVec()});
    CHECK(zero.dim() == 0);
    // duplicate/dependent rows absorbed
    BinaryCode c = BinaryCode::from_rows(6, {BitVec::ones(6), BitVec::ones(6)});
    CHECK(c.dim() == 1);
    CHECK_THROWS(BinaryCode::from_rows(4, {BitVec::unit(7)}));
}

TEST_CASE("dual pairs and involution") {
    BinaryCode e6 = named_code("e6_parity");
    CHECK(e6.dim() == 5);
    CHECK(e6.min_weight() == 2);
    BinaryCode d = e6.dual();
    CHECK(d.dim() == 1);
    CHECK(d.min_weight() == 6);

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        BinaryCode c = random_code(rng, 20, rng() % 12);
        BinaryCode dd = c.dual().dual();
        CHECK(dd == c);
        CHECK(c.dim() + c.dual().dim() == 20);
    }
}

TEST_CASE("golay24 reference facts") {
    BinaryCode g = named_code("g24");
    CHECK(g.dim() == 12);
    CHECK(g.dual() == g);
    CHECK(g.min_weight() == 8);
    CHECK(g.divisibility() == 4);
    auto wd = g.weight_distribution();
    CHECK(wd.counts[8] == 759);
    CHECK(wd.counts[12] == 2576);
    CHECK(wd.counts[0] == 1);
    CHECK(wd.total() == 4096);
    auto oracle = naive_weight_distribution(g);
    for (int w = 0; w <= 24; ++w) CHECK(wd.counts[w] == oracle[w]);
    CHECK(g.satisfies_residue_conditions());
}

TEST_CASE("weight distribution edge cases") {
    BinaryCode rep = BinaryCode::from_rows(6, {BitVec::ones(6)});
    auto wd = rep.weight_distribution();
    CHECK(wd.counts[0] == 1);
    CHECK(wd.counts[6] == 1);
    CHECK(wd.total() == 2);
    CHECK(rep.min_weight() == 6);
    CHECK(rep.divisibility() == 2);

    BinaryCode zero = BinaryCode::zero(8);
    CHECK(zero.weight_distribution().counts[0] == 1);
    CHECK_THROWS(zero.min_weight());
}

TEST_CASE("residue conditions") {
    CHECK_FALSE(BinaryCode::from_rows(24, {BitVec::ones(24)}).satisfies_residue_conditions());
    CHECK(named_code("g24").satisfies_residue_conditions());
}

TEST_CASE("span_with and direct_sum") {
    BinaryCode g = named_code("g24");
    CHECK(g.span_with(g.basis()[3]) == g);
    BinaryCode e8 = named_code("e8");
    BinaryCode s = e8.direct_sum(e8);
    CHECK(s.length() == 16);
    CHECK(s.dim() == 8);
}

TEST_CASE("the nine self-dual codes validate") {
    for (const auto& label : self_dual24_labels()) {
        CAPTURE(label);
        BinaryCode c = named_code(label);
        CHECK(c.length() == 24);
        CHECK(c.dim() == 12);
        CHECK(c.dual() == c);
        CHECK(c.divisibility() >= 4);
        CHECK(c.min_weight() == (label == "g24" ? 8 : 4));
        CHECK(c.satisfies_residue_conditions());
    }
}

TEST_CASE("weight-4 codewords span the labelled components") {
    auto weight4_span = [](const BinaryCode& c) {
        std::vector<BitVec> rows;
        BitVec cur;
        uint64_t total = uint64_t{1} << c.dim();
        for (uint64_t s = 1; s < total; ++s) {
            cur ^= c.basis()[std::countr_zero(s)];
            if (cur.weight() == 4) rows.push_back(cur);
        }
        return BinaryCode::from_rows(c.length(), rows);
    };
    auto check_span = [&](const std::string& label, const BinaryCode& expected) {
        CAPTURE(label);
        CHECK(weight4_span(named_code(label)) == expected);
    };
    auto merge = [](BinaryCode a, const BinaryCode& b) {
        std::vector<BitVec> rows = a.basis();
        rows.insert(rows.end(), b.basis().begin(), b.basis().end());
        return BinaryCode::from_rows(a.length(), rows);
    };
    check_span("d12^2", merge(d_component(12, 0, 24), d_component(12, 12, 24)));
    check_span("d24", d_component(24, 0, 24));
    check_span("e8^3", merge(merge(e8_component(0, 24), e8_component(8, 24)), e8_component(16, 24)));
    check_span("g24", BinaryCode::zero(24));
}

TEST_CASE("C7_1 and C7_2") {
    BinaryCode c71 = named_code("C7_1");
    BinaryCode c72 = named_code("C7_2");
    CHECK(c71.dim() == 7);
    CHECK(c72.dim() == 7);
    CHECK(c71.satisfies_residue_conditions());
    CHECK(c72.satisfies_residue_conditions());
}

TEST_CASE("text round trip") {
    BinaryCode g = named_code("g24");
    std::stringstream ss;
    g.write(ss);
    CHECK(BinaryCode::read(ss) == g);
    std::stringstream bad("binary 4 1\n01a1\n");
    CHECK_THROWS(BinaryCode::read(bad));
}
