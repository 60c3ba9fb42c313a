#include "z4wb/records.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace z4wb::records {

nlohmann::json result_record(const std::string& subject, const std::string& claim,
                             const std::string& verdict, const nlohmann::json& payload,
                             uint64_t seed, const std::string& timestamp) {
    nlohmann::json rec;
    rec["subject"] = subject;
    rec["claim"] = claim;
    rec["verdict"] = verdict;
    rec["seed"] = seed;
    rec["tool"] = kToolVersion;
    if (!timestamp.empty()) rec["timestamp"] = timestamp;
    rec["payload"] = payload;
    return rec;
}

std::string current_timestamp() {
    auto now = std::chrono::system_clock::now();
    auto t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string to_text(const BinaryCode& c) {
    std::ostringstream os;
    c.write(os);
    return os.str();
}

std::string to_text(const Z4Code& c) {
    std::ostringstream os;
    c.write(os);
    return os.str();
}

BinaryCode binary_from_text(const std::string& s) {
    std::istringstream is(s);
    return BinaryCode::read(is);
}

Z4Code z4_from_text(const std::string& s) {
    std::istringstream is(s);
    return Z4Code::read(is);
}

BinaryCode binary_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return BinaryCode::read(is);
}

Z4Code z4_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return Z4Code::read(is);
}

BitVec parse_vector(const std::string& s, int n) {
    BitVec v;
    if (s.find(',') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            int i = std::stoi(tok);
            if (i < 0 || i >= n) throw std::invalid_argument("vector index out of range");
            v.set(i, true);
        }
        return v;
    }
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("vector string must have length " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("vector string must be over {0,1}");
    }
    return v;
}

std::string vector_to_string(const BitVec& v, int n) { return v.to_string(n); }

std::vector<CensusCell> census_of(const AugmentationDag& dag) {
    std::vector<CensusCell> rows(13);
    for (int k = 0; k < 13; ++k) rows[k].k = k;
    for (const CodeRecord& r : dag.nodes) {
        CensusCell& cell = rows[r.k];
        ++cell.total;
        bool real = r.status.status == RealizabilityVerdict::Status::Realizable;
        bool d8 = r.min_weight >= 8;
        if (real)
            ++(d8 ? cell.realizable_d8 : cell.realizable_d4);
        else if (r.status.status == RealizabilityVerdict::Status::NonRealizable)
            ++(d8 ? cell.nonrealizable_d8 : cell.nonrealizable_d4);
    }
    std::vector<CensusCell> out;
    for (int k = 12; k >= 6; --k)
        if (rows[k].total) out.push_back(rows[k]);
    return out;
}

std::string census_grid(const std::vector<CensusCell>& rows) {
    std::ostringstream os;
    char line[96];
    std::snprintf(line, sizeof line, "%4s %7s %8s %8s %8s %8s\n", "k", "total", "R(d=8)",
                  "R(d=4)", "N(d=8)", "N(d=4)");
    os << line;
    CensusCell sum;
    for (const CensusCell& c : rows) {
        std::snprintf(line, sizeof line, "%4d %7d %8d %8d %8d %8d\n", c.k, c.total,
                      c.realizable_d8, c.realizable_d4, c.nonrealizable_d8, c.nonrealizable_d4);
        os << line;
        sum.total += c.total;
        sum.realizable_d8 += c.realizable_d8;
        sum.realizable_d4 += c.realizable_d4;
        sum.nonrealizable_d8 += c.nonrealizable_d8;
        sum.nonrealizable_d4 += c.nonrealizable_d4;
    }
    std::snprintf(line, sizeof line, "%4s %7d %8d %8d %8d %8d\n", "all", sum.total,
                  sum.realizable_d8, sum.realizable_d4, sum.nonrealizable_d8,
                  sum.nonrealizable_d4);
    os << line;
    return os.str();
}

}  // namespace z4wb::records
