#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "z4wb/canonical.hpp"
#include "z4wb/classify.hpp"
#include "z4wb/lifts.hpp"
#include "z4wb/moonshine.hpp"
#include "z4wb/named_codes.hpp"
#include "z4wb/neighbor.hpp"
#include "z4wb/records.hpp"
#include "z4wb/refdata.hpp"

using namespace z4wb;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// exit codes: 0 pass, 1 mismatch/failure, 2 budget exhausted / Unknown
constexpr int kPass = 0, kFail = 1, kUnknown = 2;

struct Options {
    std::string out;
    uint64_t seed = 0;
    uint64_t budget = 1'000'000;
};

void emit(const json& rec) { std::cout << rec.dump() << '\n'; }

json emit_record(const Options& opt, const std::string& subject, const std::string& claim,
                 bool pass, const json& payload) {
    json rec = records::result_record(subject, claim, pass ? "pass" : "fail", payload, opt.seed,
                                      records::current_timestamp());
    emit(rec);
    return rec;
}

int verify_fig1(const Options& opt) {
    const Z4Code& c = refdata::natural_code();
    json payload;
    payload["type2"] = c.is_type2();
    payload["min_euclidean_weight"] = c.min_euclidean_weight();
    payload["residue_dim"] = c.residue().dim();
    payload["residue_min_weight"] = c.residue().min_weight();
    payload["code"] = records::to_text(c);
    bool pass = c.is_type2() && c.min_euclidean_weight() == 16 && c.residue().dim() == 6 &&
                c.residue().min_weight() == 8;
    emit_record(opt, "fig1", "extremal Type II with dimension-6 residue", pass, payload);
    return pass ? kPass : kFail;
}

int verify_appendix(const Options& opt) {
    // the seven listed codes, plus the natural code and a lift of d24,
    // exhaust the nine classes of doubly even self-dual residue codes
    bool all = true;
    std::vector<BinaryCode> residues;
    for (const auto& [label, code] : refdata::self_dual_residue_codes()) {
        json payload;
        bool extremal = code.is_extremal();
        const BinaryCode& r = code.residue();
        bool self_dual = r.dim() == 12 && r == r.dual();
        bool matches_label = are_equivalent(r, named_code(label)).has_value();
        payload["extremal"] = extremal;
        payload["residue_self_dual"] = self_dual;
        payload["residue_matches_label"] = matches_label;
        payload["code"] = records::to_text(code);
        bool pass = extremal && self_dual && matches_label;
        emit_record(opt, label, "extremal Type II with the labeled self-dual residue", pass,
                    payload);
        all = all && pass;
        residues.push_back(r);
    }
    // pairwise inequivalent and distinct from g24 and d24
    residues.push_back(named_code("g24"));
    residues.push_back(named_code("d24"));
    std::vector<BinaryCode> canon;
    for (const BinaryCode& r : residues) canon.push_back(canonical_form(r).canonical);
    bool distinct = true;
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = i + 1; j < canon.size(); ++j)
            if (canon[i] == canon[j]) distinct = false;
    json payload;
    payload["classes"] = canon.size();
    payload["pairwise_inequivalent"] = distinct;
    emit_record(opt, "appendix", "with g24 and d24 the residues exhaust nine classes", distinct,
                payload);
    return (all && distinct) ? kPass : kFail;
}

int verify_table2(const Options& opt) {
    // every published minimum-weight-8 code, rebuilt from its parent and
    // generating vectors, carries an extremal Type II lift
    std::vector<std::string> names{"C6", "C7_1", "C7_2"};
    for (const auto& row : refdata::realizable_chain()) names.push_back(row.name);
    bool all = true;
    for (const std::string& name : names) {
        BinaryCode code = refdata::realizable_code(name);
        json payload;
        payload["k"] = code.dim();
        payload["min_weight"] = code.min_weight();
        bool pass;
        if (name == "C6") {
            // the published generator matrix is itself the witness
            const Z4Code& w = refdata::natural_code();
            pass = w.residue() == code && w.is_extremal();
            payload["witness"] = records::to_text(w);
        } else {
            RealizabilityVerdict v = decide_realizability(code, opt.budget, opt.seed + 1);
            pass = v.status == RealizabilityVerdict::Status::Realizable && v.witness &&
                   v.witness->is_extremal() && v.witness->residue() == code;
            payload["m"] = v.m;
            payload["exhaustive"] = v.exhaustive;
            payload["classes_checked"] = v.classes_checked;
            payload["points_sampled"] = v.points_sampled;
            if (v.witness) payload["witness"] = records::to_text(*v.witness);
        }
        pass = pass && code.min_weight() == 8;
        emit_record(opt, name, "extremal lift of the published generator span", pass, payload);
        all = all && pass;
    }
    return all ? kPass : kFail;
}

int verify_prop411(const Options& opt) {
    BinaryCode de8 = doubling(named_code("e8"));
    BinaryCode dd16 = doubling(named_code("d16plus"));
    BinaryCode de8e8 = doubling(named_code("e8").direct_sum(named_code("e8")));
    BinaryCode lhs1 = de8e8.direct_sum(de8);
    BinaryCode lhs2 = de8.direct_sum(de8).direct_sum(de8);
    BinaryCode lhs3 = dd16.direct_sum(de8);
    BinaryCode d_e83 = doubling(named_code("e8^3"));
    BinaryCode d_d16e8 = doubling(named_code("d16e8"));

    BitVec xi_hi, xi_lo;
    for (int i = 0; i < 8; ++i) {
        xi_hi.set(32 + 2 * i, true);
        xi_lo.set(2 * i, true);
    }

    bool identities = lhs1 == d_e83.span_with(xi_hi) && lhs2 == lhs1.span_with(xi_lo) &&
                      lhs3 == d_d16e8.span_with(xi_hi);
    bool cosets = d_e83.coset_min_weight(xi_hi) == 8 && lhs1.coset_min_weight(xi_lo) == 8 &&
                  d_d16e8.coset_min_weight(xi_hi) == 8;

    TriplyEvenCandidate base1 = moonshine_candidate_check(d_e83);
    base1.status = doubling_status(named_code("e8^3"), opt.budget, opt.seed + 1);
    MoonshineStatus s1 = weight8_augment_status(base1, xi_hi);
    TriplyEvenCandidate mid = moonshine_candidate_check(lhs1);
    mid.status = s1;
    MoonshineStatus s2 = weight8_augment_status(mid, xi_lo);
    TriplyEvenCandidate base3 = moonshine_candidate_check(d_d16e8);
    base3.status = doubling_status(named_code("d16e8"), opt.budget, opt.seed + 1);
    MoonshineStatus s3 = weight8_augment_status(base3, xi_hi);
    bool moonshine = s1.verdict == MoonshineStatus::Verdict::Moonshine &&
                     s2.verdict == MoonshineStatus::Verdict::Moonshine &&
                     s3.verdict == MoonshineStatus::Verdict::Moonshine;

    json payload;
    payload["identities"] = identities;
    payload["coset_min_weights_8"] = cosets;
    payload["augmentations_moonshine"] = moonshine;
    payload["dims"] = {lhs2.dim(), lhs1.dim(), lhs3.dim()};
    bool pass = identities && cosets && moonshine && lhs2.dim() == 15 && lhs1.dim() == 14 &&
                lhs3.dim() == 14;
    emit_record(opt, "prop411", "three decomposable identities with weight-8 coset steps", pass,
                payload);
    return pass ? kPass : kFail;
}

std::string status_name(RealizabilityVerdict::Status s) {
    switch (s) {
        case RealizabilityVerdict::Status::Realizable: return "realizable";
        case RealizabilityVerdict::Status::NonRealizable: return "non-realizable";
        default: return "unknown";
    }
}

json node_payload(const CodeRecord& r) {
    json p;
    p["k"] = r.k;
    p["min_weight"] = r.min_weight;
    p["dual_min_weight"] = r.dual_min_weight;
    if (!r.label.empty()) p["label"] = r.label;
    p["status"] = status_name(r.status.status);
    p["m"] = r.status.m;
    p["exhaustive"] = r.status.exhaustive;
    p["classes_checked"] = r.status.classes_checked;
    p["code"] = records::to_text(r.code);
    if (r.status.witness) p["witness"] = records::to_text(*r.status.witness);
    for (const std::string& s : r.provenance) p["provenance"].push_back(s);
    return p;
}

const AugmentationDag& classified(const Options& opt) {
    static std::map<uint64_t, AugmentationDag> cache;
    auto it = cache.find(opt.seed);
    if (it == cache.end()) {
        AugmentationDag dag = enumerate_condition_codes();
        assign_statuses(dag, opt.budget, opt.seed + 1);
        it = cache.emplace(opt.seed, std::move(dag)).first;
    }
    return it->second;
}

int cmd_classify(const Options& opt) {
    const AugmentationDag& dag = classified(opt);
    fs::create_directories(fs::path(opt.out) / "codes");
    json manifest = json::array();
    int unknown = 0;
    for (size_t i = 0; i < dag.nodes.size(); ++i) {
        const CodeRecord& r = dag.nodes[i];
        if (r.status.status == RealizabilityVerdict::Status::Unknown) ++unknown;
        char name[32];
        std::snprintf(name, sizeof name, "k%02d_%03zu.txt", r.k, i);
        std::ofstream(fs::path(opt.out) / "codes" / name) << records::to_text(r.code);
        json rec = records::result_record(name, "residue-condition class", status_name(r.status.status),
                                          node_payload(r), opt.seed);
        manifest.push_back(rec);
        emit(rec);
    }
    std::ofstream(fs::path(opt.out) / "manifest.json") << manifest.dump(1) << '\n';

    auto cells = records::census_of(dag);
    std::cerr << records::census_grid(cells);
    bool match = cells.size() == refdata::census().size();
    for (const auto& row : refdata::census())
        for (const auto& cell : cells)
            if (cell.k == row.k)
                match = match && cell.total == row.total &&
                        cell.realizable_d8 == row.realizable_d8 &&
                        cell.realizable_d4 == row.realizable_d4 &&
                        cell.nonrealizable_d8 == row.nonrealizable_d8 &&
                        cell.nonrealizable_d4 == row.nonrealizable_d4;
    ClassificationReport rep = verify_classification_theorem(dag);
    json summary;
    summary["nodes"] = dag.nodes.size();
    summary["edges"] = dag.edges.size();
    summary["matches_published_census"] = match;
    summary["classification_theorem"] = rep.ok();
    emit_record(opt, "classify", "published census reproduced", match && rep.ok(), summary);
    if (unknown) return kUnknown;
    return (match && rep.ok()) ? kPass : kFail;
}

int cmd_report(const Options& opt) {
    fs::path mpath = fs::path(opt.out) / "manifest.json";
    std::ifstream is(mpath);
    if (!is) {
        std::cerr << "report: missing database " << mpath << " (run `z4wb classify` first)\n";
        return kFail;
    }
    json manifest = json::parse(is);
    std::vector<records::CensusCell> rows(13);
    for (int k = 0; k < 13; ++k) rows[k].k = k;
    int realizable = 0, nonrealizable = 0, unknown = 0;
    std::vector<std::string> realizable_labels, nonrealizable_labels;
    for (const json& rec : manifest) {
        const json& p = rec["payload"];
        int k = p["k"];
        bool d8 = p["min_weight"].get<int>() >= 8;
        std::string st = rec["verdict"];
        records::CensusCell& cell = rows[k];
        ++cell.total;
        if (st == "realizable") {
            ++realizable;
            ++(d8 ? cell.realizable_d8 : cell.realizable_d4);
            if (p.contains("label")) realizable_labels.push_back(p["label"]);
        } else if (st == "non-realizable") {
            ++nonrealizable;
            ++(d8 ? cell.nonrealizable_d8 : cell.nonrealizable_d4);
            if (p.contains("label")) nonrealizable_labels.push_back(p["label"]);
        } else {
            ++unknown;
        }
    }
    std::vector<records::CensusCell> cells;
    for (int k = 12; k >= 6; --k)
        if (rows[k].total) cells.push_back(rows[k]);

    std::cout << "Residue-condition classes by dimension\n"
              << records::census_grid(cells) << '\n';
    std::cout << "Realizable: " << realizable << "  Non-realizable: " << nonrealizable
              << "  Unknown: " << unknown << "\n\n";
    std::cout << "Realizable labeled classes:";
    for (const std::string& l : realizable_labels) std::cout << ' ' << l;
    std::cout << "\nMaximal non-realizable classes:";
    for (const std::string& l : nonrealizable_labels) std::cout << ' ' << l;
    std::cout << "\n\nMoonshine doubling census: " << realizable << " Moonshine, "
              << nonrealizable << " NotMoonshine\n";
    std::cout << "Moonshine chain:";
    for (const std::string& l : realizable_labels)
        if (l[0] == 'C') std::cout << " doubling(" << l << ")";
    std::cout << '\n';
    return (realizable == 149 && nonrealizable == 30 && unknown == 0) ? kPass : kFail;
}

int cmd_lifts(const Options& opt, const std::string& path) {
    BinaryCode c = records::binary_from_file(path);
    LiftSpace space = build_lift_space(c);
    RealizabilityVerdict v = decide_realizability(c, opt.budget, opt.seed + 1);
    json payload;
    payload["n"] = c.length();
    payload["k"] = c.dim();
    payload["m0"] = space.m0();
    payload["m"] = space.m();
    payload["exhaustive"] = v.exhaustive;
    payload["classes_checked"] = v.classes_checked;
    payload["points_sampled"] = v.points_sampled;
    if (v.witness) payload["witness"] = records::to_text(*v.witness);
    json rec = records::result_record(path, "extremal Type II lift existence",
                                      status_name(v.status), payload, opt.seed,
                                      records::current_timestamp());
    emit(rec);
    return v.status == RealizabilityVerdict::Status::Unknown ? kUnknown : kPass;
}

int cmd_augment(const Options& opt, const std::string& path, const std::string& vec, bool down) {
    Z4Code c = records::z4_from_file(path);
    BitVec a = records::parse_vector(vec, c.length());
    json payload;
    payload["a"] = records::vector_to_string(a, c.length());
    try {
        if (down) {
            auto [next, wit] = deaugment_extremal(c, a);
            payload["alpha"] = wit.alpha.to_string(c.length());
            payload["alpha_prime"] = wit.alpha_prime.to_string(c.length());
            payload["c"] = records::vector_to_string(wit.c, c.length());
            payload["glue"] = wit.glue.to_string(c.length());
            payload["result"] = records::to_text(next);
            payload["result_extremal"] = next.is_extremal();
        } else {
            auto [next, wit] = augment_extremal(c, a);
            payload["alpha"] = wit.alpha.to_string(c.length());
            payload["b"] = records::vector_to_string(wit.b, c.length());
            payload["glue"] = wit.glue.to_string(c.length());
            payload["result"] = records::to_text(next);
            payload["result_extremal"] = next.is_extremal();
        }
    } catch (const std::exception& e) {
        payload["error"] = e.what();
        emit_record(opt, path, down ? "weight-4 de-augmentation" : "weight-4 augmentation",
                    false, payload);
        return kFail;
    }
    emit_record(opt, path, down ? "weight-4 de-augmentation" : "weight-4 augmentation", true,
                payload);
    return kPass;
}

int cmd_double(const Options& opt, const std::string& path) {
    BinaryCode c = records::binary_from_file(path);
    BinaryCode d = doubling(c);
    TriplyEvenCandidate cand = moonshine_candidate_check(d);
    json payload;
    payload["input_dim"] = c.dim();
    payload["result"] = records::to_text(d);
    payload["triply_even"] = cand.triply_even;
    payload["contains_one"] = cand.contains_one;
    payload["dual_min_ge4"] = cand.dual_min_ge4;
    emit_record(opt, path, "extended doubling", true, payload);
    return kPass;
}

int cmd_moonshine(const Options& opt, const std::string& path) {
    BinaryCode c = records::binary_from_file(path);
    MoonshineStatus st;
    json payload;
    if (c.length() == 24) {
        st = doubling_status(c, opt.budget, opt.seed + 1);
        payload["input"] = "length-24 code; judging its doubling";
    } else if (c.length() == 48) {
        TriplyEvenCandidate cand = moonshine_candidate_check(c);
        st = cand.status;
        payload["triply_even"] = cand.triply_even;
        payload["contains_one"] = cand.contains_one;
        payload["dual_min_ge4"] = cand.dual_min_ge4;
    } else {
        std::cerr << "moonshine: expected a length-24 or length-48 code\n";
        return kFail;
    }
    const char* verdict = st.verdict == MoonshineStatus::Verdict::Moonshine ? "moonshine"
                          : st.verdict == MoonshineStatus::Verdict::NotMoonshine ? "not-moonshine"
                                                                                 : "unknown";
    if (st.witness) payload["witness"] = records::to_text(*st.witness);
    if (st.classes_checked) payload["classes_checked"] = *st.classes_checked;
    for (const std::string& s : st.chain) payload["chain"].push_back(s);
    emit(records::result_record(path, "moonshine-code status", verdict, payload, opt.seed,
                                records::current_timestamp()));
    if (st.verdict == MoonshineStatus::Verdict::Moonshine) return kPass;
    return st.verdict == MoonshineStatus::Verdict::NotMoonshine ? kFail : kUnknown;
}

int cmd_canon(const Options& opt, const std::string& path) {
    BinaryCode c = records::binary_from_file(path);
    CanonicalCertificate cert = canonical_form(c);
    json payload;
    payload["canonical"] = records::to_text(cert.canonical);
    payload["aut_order"] = u128_to_string(cert.aut_order);
    payload["search_nodes"] = cert.nodes;
    std::vector<int> w;
    for (int i = 0; i < c.length(); ++i) w.push_back(cert.witness(i));
    payload["witness_permutation"] = w;
    emit_record(opt, path, "canonical form under coordinate permutation", true, payload);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z4 code algebra: extremal Type II lifts, classification, moonshine calculus"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("Z4WB_CACHE")) opt.out = env;
    if (opt.out.empty()) opt.out = "z4wb_out";
    app.add_option("--out", opt.out, "output/cache directory");
    app.add_option("--seed", opt.seed, "random seed (default 0)");
    app.add_option("--budget", opt.budget, "sampling budget for randomized searches");

    std::string target, codefile, vec;
    auto* verify = app.add_subcommand("verify", "re-check published data");
    verify->add_option("target", target, "fig1|appendix|table2-chains|prop411|all")->required();
    auto* classify = app.add_subcommand("classify", "enumerate and classify the 179 classes");
    auto* lifts = app.add_subcommand("lifts", "lift-space search for a binary code");
    lifts->add_option("codefile", codefile)->required();
    auto* augment = app.add_subcommand("augment", "weight-4 augmentation of a z4 code");
    augment->add_option("z4file", codefile)->required();
    augment->add_option("vector", vec)->required();
    auto* deaugment = app.add_subcommand("deaugment", "weight-4 de-augmentation of a z4 code");
    deaugment->add_option("z4file", codefile)->required();
    deaugment->add_option("vector", vec)->required();
    auto* dbl = app.add_subcommand("double", "extended doubling of a binary code");
    dbl->add_option("codefile", codefile)->required();
    auto* moonshine = app.add_subcommand("moonshine", "moonshine-code status");
    moonshine->add_option("codefile", codefile)->required();
    auto* canon = app.add_subcommand("canon", "canonical form of a binary code");
    canon->add_option("codefile", codefile)->required();
    app.add_subcommand("report", "summarize a classified database");

    CLI11_PARSE(app, argc, argv);
    try {
        if (verify->parsed()) {
            if (target == "fig1") return verify_fig1(opt);
            if (target == "appendix") return verify_appendix(opt);
            if (target == "table2-chains") return verify_table2(opt);
            if (target == "prop411") return verify_prop411(opt);
            if (target == "all") {
                int rc = 0;
                rc = std::max(rc, verify_fig1(opt));
                rc = std::max(rc, verify_appendix(opt));
                rc = std::max(rc, verify_table2(opt));
                rc = std::max(rc, verify_prop411(opt));
                return rc;
            }
            std::cerr << "verify: unknown target " << target << '\n';
            return kFail;
        }
        if (classify->parsed()) return cmd_classify(opt);
        if (lifts->parsed()) return cmd_lifts(opt, codefile);
        if (augment->parsed()) return cmd_augment(opt, codefile, vec, false);
        if (deaugment->parsed()) return cmd_augment(opt, codefile, vec, true);
        if (dbl->parsed()) return cmd_double(opt, codefile);
        if (moonshine->parsed()) return cmd_moonshine(opt, codefile);
        if (canon->parsed()) return cmd_canon(opt, codefile);
        return cmd_report(opt);
    } catch (const std::exception& e) {
        std::cerr << "z4wb: " << e.what() << '\n';
        return kFail;
    }
}
