#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "z4wb/records.hpp"
#include "z4wb/named_codes.hpp"
#include "z4wb/refdata.hpp"

using namespace z4wb;
using nlohmann::json;

TEST_CASE("result records carry the re-verification fields") {
    json payload = {{"m", 14}, {"classes_checked", 159}};
    json rec = records::result_record("N9_1", "lift-class count", "pass", payload, 7, "");
    CHECK(rec["subject"] == "N9_1");
    CHECK(rec["claim"] == "lift-class count");
    CHECK(rec["verdict"] == "pass");
    CHECK(rec["seed"] == 7);
    CHECK(rec["tool"] == records::kToolVersion);
    CHECK(!rec.contains("timestamp"));  // deterministic form for manifests
    CHECK(rec["payload"]["m"] == 14);

    json stamped = records::result_record("x", "y", "fail", payload, 0, "2026-01-01T00:00:00Z");
    CHECK(stamped["timestamp"] == "2026-01-01T00:00:00Z");
    // single line when dumped: safe for JSONL streaming
    CHECK(stamped.dump().find('\n') == std::string::npos);
}

TEST_CASE("code payloads round-trip through the text formats") {
    BinaryCode c = named_code("g24");
    CHECK(records::binary_from_text(records::to_text(c)) == c);
    const Z4Code& z = refdata::natural_code();
    CHECK(records::z4_from_text(records::to_text(z)) == z);
}

TEST_CASE("vector parsing accepts bitstrings and index lists") {
    BitVec v = records::parse_vector("1,3,5,21", 24);
    CHECK(v.weight() == 4);
    CHECK(v.get(21));
    std::string s = records::vector_to_string(v, 24);
    CHECK(s.size() == 24);
    CHECK(records::parse_vector(s, 24) == v);
    CHECK_THROWS(records::parse_vector("01", 24));
    CHECK_THROWS(records::parse_vector("0,99", 24));
    CHECK_THROWS(records::parse_vector(std::string(23, '0') + "2", 24));
}

TEST_CASE("census grid renders the published totals") {
    std::vector<records::CensusCell> cells;
    for (const auto& row : refdata::census())
        cells.push_back({row.k, row.total, row.realizable_d8, row.realizable_d4,
                         row.nonrealizable_d8, row.nonrealizable_d4});
    std::string grid = records::census_grid(cells);
    CHECK(grid.find("179") != std::string::npos);    // grand total
    CHECK(grid.find("k") != std::string::npos);      // header
    CHECK(grid.find("all") != std::string::npos);    // summary row
    // one line per dimension plus header and summary
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 9);
}
