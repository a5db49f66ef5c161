#ifndef CACTUSREG_REPRO_HPP
#define CACTUSREG_REPRO_HPP

#include <chrono>
#include <string>
#include <vector>

#include "cactusreg/hochster.hpp"
#include "cactusreg/invariants.hpp"
#include "cactusreg/spec_parse.hpp"

namespace cactusreg {

// Golden regularity table, rechecked from scratch on every run: each row
// names a graph, the frozen expected value, and optional side conditions
// (bound comparison, closed-form cross-check). `got` always comes from
// the homology oracle, never from the formulas under test.
struct ReproRow {
    std::string name;
    std::string spec;
    int expected = -1;
    int bound = -1;          // -1 when the bound report does not apply
    int expected_bound = -1;  // pinned bound value, -1 to skip the check
    bool expect_equality = false;  // expected == bound
    bool expect_strict = false;    // expected < bound
    int formula = -1;      // closed-form value that must agree, -1 if none
    int got = -1;
    long long elapsed_ms = 0;
    bool pass = false;
};

struct ReproOptions {
    bool stretch = false;
    FieldSpec field;
    int workers = 0;
};

namespace detail {

inline ReproRow make_row(std::string name, std::string spec, int expected) {
    ReproRow row;
    row.name = std::move(name);
    row.spec = std::move(spec);
    row.expected = expected;
    return row;
}

}  // namespace detail

inline std::vector<ReproRow> repro_row_plan(bool stretch) {
    std::vector<ReproRow> rows;
    {
        ReproRow r = detail::make_row("G2", "paper:G2", 6);
        r.expect_equality = true;
        r.expected_bound = 6;
        rows.push_back(r);
    }
    if (stretch) {
        ReproRow r = detail::make_row("G1", "paper:G1", 6);
        r.expect_strict = true;
        r.expected_bound = 7;
        rows.push_back(r);
    }
    struct LemmaCase {
        int k, m1, m2, expected;
    };
    const LemmaCase l41[] = {{4, 3, 2, 3}, {4, 3, 3, 4}, {5, 3, 2, 4}, {5, 3, 3, 5}};
    for (const auto& c : l41) {
        std::string tag = std::to_string(c.k) + "," + std::to_string(c.m1) + "," + std::to_string(c.m2);
        ReproRow r = detail::make_row("lemma41(" + tag + ")", "lemma41:" + tag, c.expected);
        r.formula = lemma41_reg(c.k, c.m1, c.m2);
        rows.push_back(r);
    }
    const LemmaCase l42[] = {{4, 2, 2, 3}, {4, 2, 3, 4}, {4, 3, 3, 4}, {5, 2, 2, 4}};
    for (const auto& c : l42) {
        std::string tag = std::to_string(c.k) + "," + std::to_string(c.m1) + "," + std::to_string(c.m2);
        ReproRow r = detail::make_row("lemma42(" + tag + ")", "lemma42:" + tag, c.expected);
        r.formula = lemma42_reg(c.k, c.m1, c.m2);
        r.expect_equality = !(c.m1 == 2 && c.m2 == 2);
        r.expected_bound = c.k;  // two outside cliques plus the (k-2) cycle term
        rows.push_back(r);
    }
    const std::pair<int, int> chain_ends[] = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}};
    for (auto [a, b] : chain_ends) {
        std::string spec = "chain:K" + std::to_string(a) + ",C4,K" + std::to_string(b);
        ReproRow r = detail::make_row("c4-chain(K" + std::to_string(a) + ",C4,K" + std::to_string(b) + ")",
                                      spec, 4);
        r.expect_equality = true;
        r.expected_bound = 4;
        rows.push_back(r);
    }
    for (int k : {4, 5, 6}) {
        ReproRow r = detail::make_row("C" + std::to_string(k), "cycle:" + std::to_string(k), k - 2);
        r.expect_equality = true;
        r.expected_bound = k - 2;
        rows.push_back(r);
    }
    return rows;
}

inline void run_repro_row(ReproRow& row, const ReproOptions& opts) {
    Graph g = graph_from_spec(row.spec);
    if (row.spec.rfind("chain:", 0) == 0) row.formula = exact_reg_theorem44(g);
    try {
        row.bound = invariant_report(g).paper_bound;
    } catch (const BlockKindUnsupported&) {
        row.bound = -1;
    }
    HochsterConfig cfg;
    cfg.field = opts.field;
    cfg.vertex_cap = kHochsterHardCap;
    cfg.workers = opts.workers;
    auto start = std::chrono::steady_clock::now();
    row.got = regularity_hochster(g, cfg);
    row.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    row.pass = row.got == row.expected;
    if (row.expected_bound != -1 && row.bound != row.expected_bound) row.pass = false;
    if (row.formula != -1 && row.formula != row.expected) row.pass = false;
    if (row.expect_equality && row.got != row.bound) row.pass = false;
    if (row.expect_strict && !(row.bound != -1 && row.got < row.bound)) row.pass = false;
    if (row.bound != -1 && row.got > row.bound) row.pass = false;
}

inline std::vector<ReproRow> repro_rows(const ReproOptions& opts) {
    auto rows = repro_row_plan(opts.stretch);
    for (auto& row : rows) run_repro_row(row, opts);
    return rows;
}

}  // namespace cactusreg

#endif  // CACTUSREG_REPRO_HPP
