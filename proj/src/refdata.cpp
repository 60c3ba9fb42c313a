#include "z4wb/refdata.hpp"

#include <map>
#include <stdexcept>

#include "z4wb/named_codes.hpp"

namespace z4wb::refdata {

namespace {

Z4Code z4_from_strings(const std::vector<std::string>& rows) {
    std::vector<Z4Vec> v;
    for (const std::string& s : rows) v.push_back(Z4Vec::from_string(s));
    return Z4Code::from_rows(static_cast<int>(rows.front().size()), v);
}

// [I12 | M] from the 12 tail rows.
Z4Code identity_tail_code(const std::vector<std::string>& m) {
    std::vector<Z4Vec> rows;
    for (int i = 0; i < 12; ++i) {
        Z4Vec v = Z4Vec::from_string(m[i]);
        Z4Vec row;
        row.set(i, 1);
        for (int j = 0; j < 12; ++j) row.set(12 + j, v.get(j));
        rows.push_back(row);
    }
    return Z4Code::from_rows(24, rows);
}

BitVec bits(const std::string& s) { return BitVec::from_string(s); }

}  // namespace

const Z4Code& natural_code() {
    static const Z4Code real = z4_from_strings({
        "111111111111111100000000",
        "020000001111311100020000",
        "111111110000000011111111",
        "010010111013010210110100",
        "111000011130020100011110",
        "011110003020011101111000",
        "000000002022020000000000",
        "000000002220000200000000",
        "000000002000022200000000",
        "020020220000000000000000",
        "222000020000000000000000",
        "022220000000000000000000",
        "020000022020000000000000",
        "020020002000020000000000",
        "022000002000000200000000",
        "020000020000000000020200",
        "020020000000000000220000",
        "022000000000000000022000",
    });
    return real;
}

const BinaryCode& c6() {
    static const BinaryCode r = natural_code().residue();
    return r;
}

const std::vector<std::pair<std::string, Z4Code>>& self_dual_residue_codes() {
    static const std::vector<std::pair<std::string, Z4Code>> codes = {
        {"d12^2", identity_tail_code({
                      "311222000022", "112302000002", "310010020022", "130221220020",
                      "330202300020", "121311130200", "323111323220", "103111322100",
                      "101133102210", "101331322003", "132202213331", "213131331333"})},
        {"d10e7^2", identity_tail_code({
                        "333220002022", "132120002220", "132012002022", "332023220200",
                        "002220333202", "213113033002", "213113101200", "233113312000",
                        "220002220131", "121311022231", "321111002301", "123133202312"})},
        {"d8^3", identity_tail_code({
                     "131000222202", "132122020002", "110232020022", "220001310020",
                     "202001321022", "013310313220", "231133213000", "121331120100",
                     "101131102032", "301111300221", "130221300133", "231330002113"})},
        {"d6^4", identity_tail_code({
                     "311222200002", "130102222200", "020213122002", "220013010200",
                     "033301131202", "213321132320", "312230333300", "121311003120",
                     "121130132010", "303110112021", "112203132233", "031131002233"})},
        {"d4^6", identity_tail_code({
                     "311002220220", "200333022220", "220022311222", "011031123102",
                     "121330332122", "332121211120", "301123121212", "031110033232",
                     "312231130030", "101231031201", "310310303221", "033123130021"})},
        {"e8^3", identity_tail_code({
                     "213120000200", "103102202202", "132100002020", "131022002202",
                     "222001310220", "002012130200", "220011032000", "022211320222",
                     "202002022131", "000020203233", "222200023303", "022202201310"})},
        {"d16e8", identity_tail_code({
                      "211302200000", "103102022022", "332320022222", "333020220220",
                      "022001331331", "200230113111", "220013033113", "220231321111",
                      "002231110131", "022013313031", "220231133321", "002233113310"})},
    };
    return codes;
}

namespace {

const std::map<std::string, BitVec>& realizable_vectors() {
    static const std::map<std::string, BitVec> v = {
        {"v7", bits("100001110011001101100110")},
        {"v81", bits("010000010000101000110011")},
        {"v82", bits("100001110010110100110011")},
        {"v83", bits("100001110010110100000000")},
        {"v841", bits("000011000001110101000100")},
        {"v842", bits("000011110000110000110000")},
        {"v91", bits("010000010000111100101000")},
        {"v92", bits("100001000010001001011001")},
        {"v931", bits("000010010010000100011011")},
        {"v932", bits("000011000000111101111011")},
        {"v94", bits("010000100000001101110010")},
        {"v95", bits("100001110010110100110011")},
        {"v96", bits("100001110000000000110011")},
        {"v101", bits("100001110000000000110011")},
        {"v102", bits("100000100010000100010111")},
        {"v103", bits("100000010010100001100101")},
        {"v11", bits("100000100000100101000111")},
        {"v12", bits("100000010000010100011101")},
    };
    return v;
}

const std::map<std::string, BitVec>& nonrealizable_vectors() {
    static const std::map<std::string, BitVec> v = {
        {"w7", bits("000001100011000000011011")},
        {"w81", bits("000000110001111001111011")},
        {"w82", bits("000000110111010001110111")},
        {"w91", bits("000010010011010101000100")},
        {"w92", bits("000010010001000101010011")},
        {"w93", bits("000000000101000000000101")},
        {"w94", bits("000000000100001000001001")},
        {"w95", bits("000000000001010000010100")},
        {"w96", bits("000000000011100101110010")},
        {"w97", bits("000000000111100000101101")},
        {"w98", bits("000000000101000001010000")},
        {"w9", bits("000010010100101100100100")},
        {"w101", bits("000000000101011001100101")},
        {"w102", bits("000000000100101100000000")},
    };
    return v;
}

}  // namespace

const BitVec& realizable_vector(const std::string& name) {
    auto it = realizable_vectors().find(name);
    if (it == realizable_vectors().end())
        throw std::invalid_argument("unknown realizable vector '" + name + "'");
    return it->second;
}

const BitVec& nonrealizable_vector(const std::string& name) {
    auto it = nonrealizable_vectors().find(name);
    if (it == nonrealizable_vectors().end())
        throw std::invalid_argument("unknown non-realizable vector '" + name + "'");
    return it->second;
}

const std::vector<ChainRow>& realizable_chain() {
    static const std::vector<ChainRow> rows = {
        {"C7_3", "C6", {"v7"}},
        {"C8_1", "C7_3", {"v81"}},
        {"C8_2", "C7_3", {"v82"}},
        {"C8_3", "C7_3", {"v83"}},
        {"C8_4", "C6", {"v841", "v842"}},
        {"C9_1", "C8_3", {"v91"}},
        {"C9_2", "C8_4", {"v92"}},
        {"C9_3", "C7_3", {"v931", "v932"}},
        {"C9_4", "C8_3", {"v94"}},
        {"C9_5", "C8_1", {"v95"}},
        {"C9_6", "C8_3", {"v96"}},
        {"C10_1", "C9_4", {"v101"}},
        {"C10_2", "C9_4", {"v102"}},
        {"C10_3", "C9_4", {"v103"}},
        {"C11", "C10_1", {"v11"}},
        {"C12", "C11", {"v12"}},
    };
    return rows;
}

const std::vector<MaximalRow>& maximal_nonrealizable() {
    static const std::vector<MaximalRow> rows = {
        {"N9_1", {"w7", "w81", "w91"}, 14, 159},
        {"N9_2", {"w7", "w81", "w92"}, 14, 372},
        {"N9_3", {"w7", "w81", "w93"}, 14, 170},
        {"N9_4", {"w7", "w82", "w94"}, 14, 388},
        {"N9_5", {"w7", "w82", "w95"}, 14, 228},
        {"N9_6", {"w7", "w82", "w96"}, 14, 254},
        {"N9_7", {"w7", "w82", "w97"}, 14, 287},
        {"N9_8", {"w7", "w82", "w98"}, 14, 488},
        {"N10_1", {"w7", "w81", "w9", "w101"}, 23, 299},
        {"N10_2", {"w7", "w81", "w9", "w102"}, 23, 378},
    };
    return rows;
}

const std::vector<CensusRow>& census() {
    static const std::vector<CensusRow> rows = {
        {12, 9, 1, 8, 0, 0},  {11, 21, 1, 20, 0, 0}, {10, 49, 3, 44, 0, 2},
        {9, 60, 6, 40, 4, 10}, {8, 32, 4, 16, 8, 4},  {7, 7, 3, 2, 2, 0},
        {6, 1, 1, 0, 0, 0},
    };
    return rows;
}

BinaryCode realizable_code(const std::string& name) {
    if (name == "C6") return c6();
    if (name == "C7_1") return named_code("C7_1");
    if (name == "C7_2") return named_code("C7_2");
    for (const ChainRow& row : realizable_chain()) {
        if (row.name != name) continue;
        BinaryCode c = realizable_code(row.parent);
        for (const std::string& vn : row.vectors) c = c.span_with(realizable_vector(vn));
        return c;
    }
    throw std::invalid_argument("unknown realizable code '" + name + "'");
}

}  // namespace z4wb::refdata
