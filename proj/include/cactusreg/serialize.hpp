#ifndef CACTUSREG_SERIALIZE_HPP
#define CACTUSREG_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "cactusreg/invariants.hpp"
#include "cactusreg/koszul.hpp"

namespace cactusreg {

using ordered_json = nlohmann::ordered_json;

// One verification row: a graph, its bound report, and the exact
// regularity it was checked against.
struct VerificationRecord {
    std::string spec;
    InvariantReport report;
    int reg = 0;
    std::string method;
    bool bound_satisfied = false;
    bool equality = false;
};

inline ordered_json to_json(const InvariantReport& r) {
    ordered_json counts = ordered_json::object();
    for (const auto& [k, v] : r.cycle_counts) counts[std::to_string(k)] = v;
    return ordered_json{{"n", r.n},
                        {"block_count", r.block_count},
                        {"c", r.c},
                        {"c_prime", r.c_prime},
                        {"cycle_counts", counts},
                        {"big_c", r.big_c},
                        {"paper_bound", r.paper_bound},
                        {"smk_bound", r.smk_bound},
                        {"is_block_graph", r.is_block_graph},
                        {"is_cactus", r.is_cactus},
                        {"is_cycle_clique", r.is_cycle_clique},
                        {"is_indecomposable", r.is_indecomposable}};
}

inline std::string packed_cycle_counts(const InvariantReport& r) {
    std::string out;
    for (const auto& [k, v] : r.cycle_counts) {
        if (!out.empty()) out += '|';
        out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out;
}

inline const char* report_csv_header() {
    return "n,block_count,c,c_prime,cycle_counts,big_c,paper_bound,smk_bound,"
           "is_block_graph,is_cactus,is_cycle_clique,is_indecomposable";
}

inline std::string report_csv_row(const InvariantReport& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    out += std::to_string(r.n) + ",";
    out += std::to_string(r.block_count) + ",";
    out += std::to_string(r.c) + ",";
    out += std::to_string(r.c_prime) + ",";
    out += packed_cycle_counts(r) + ",";
    out += std::to_string(r.big_c) + ",";
    out += std::to_string(r.paper_bound) + ",";
    out += std::to_string(r.smk_bound) + ",";
    out += std::string(b(r.is_block_graph)) + ",";
    out += std::string(b(r.is_cactus)) + ",";
    out += std::string(b(r.is_cycle_clique)) + ",";
    out += b(r.is_indecomposable);
    return out;
}

inline ordered_json to_json(const BettiTable& t) {
    ordered_json entries = ordered_json::array();
    for (const auto& [ij, v] : t.entries)
        entries.push_back(ordered_json::array({ij.first, ij.second, v}));
    return ordered_json{{"entries", entries}, {"reg", t.reg()}, {"pd", t.pd()}};
}

inline ordered_json to_json(const VerificationRecord& rec) {
    return ordered_json{{"spec", rec.spec},
                        {"report", to_json(rec.report)},
                        {"reg", rec.reg},
                        {"method", rec.method},
                        {"bound_satisfied", rec.bound_satisfied},
                        {"equality", rec.equality}};
}

inline const char* verification_csv_header() {
    return "spec,n,reg,method,paper_bound,smk_bound,bound_satisfied,equality";
}

inline std::string verification_csv_row(const VerificationRecord& rec) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    out += rec.spec + ",";
    out += std::to_string(rec.report.n) + ",";
    out += std::to_string(rec.reg) + ",";
    out += rec.method + ",";
    out += std::to_string(rec.report.paper_bound) + ",";
    out += std::to_string(rec.report.smk_bound) + ",";
    out += std::string(b(rec.bound_satisfied)) + ",";
    out += b(rec.equality);
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_SERIALIZE_HPP
