#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "z4wb/binary_code.hpp"
#include "z4wb/classify.hpp"
#include "z4wb/z4_code.hpp"

// Result-record plumbing shared by the CLI and the report writer.  Records
// are line-delimited JSON; code payloads embed the `binary`/`z4` text
// formats so every verdict can be re-checked from the record alone.
namespace z4wb::records {

inline constexpr const char* kToolVersion = "z4wb 0.1.0";

// {"subject", "claim", "verdict", "seed", "tool", "payload"}; pass
// `timestamp` empty for deterministic output (manifests).
nlohmann::json result_record(const std::string& subject, const std::string& claim,
                             const std::string& verdict, const nlohmann::json& payload,
                             uint64_t seed, const std::string& timestamp = "");

std::string current_timestamp();

std::string to_text(const BinaryCode& c);
std::string to_text(const Z4Code& c);
BinaryCode binary_from_text(const std::string& s);
Z4Code z4_from_text(const std::string& s);
BinaryCode binary_from_file(const std::string& path);
Z4Code z4_from_file(const std::string& path);

// "0101..." (length n) or comma-separated support indices like "0,5,17,22".
BitVec parse_vector(const std::string& s, int n);
std::string vector_to_string(const BitVec& v, int n);

// Census grid: per dimension, totals split by realizability and minimum
// weight, rendered as a fixed-width table.
struct CensusCell {
    int k = 0;
    int total = 0, realizable_d8 = 0, realizable_d4 = 0;
    int nonrealizable_d8 = 0, nonrealizable_d4 = 0;
};
std::vector<CensusCell> census_of(const AugmentationDag& dag);
std::string census_grid(const std::vector<CensusCell>& rows);

}  // namespace z4wb::records
