#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cactusreg/generator.hpp"
#include "cactusreg/graph_io.hpp"
#include "cactusreg/regularity.hpp"
#include "cactusreg/repro.hpp"
#include "cactusreg/serialize.hpp"
#include "cactusreg/spec_parse.hpp"

namespace {

using namespace cactusreg;

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitViolation = 4;

struct CommonOpts {
    std::string input;
    std::string spec;
    std::string format = "text";
    std::string field = "32003";
    int cap = 9;
    int workers = 0;
    bool timings = false;
};

void add_io_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "edge-list file (see --help footer for the format)");
    cmd->add_option("--spec", o.spec, "builder spec, e.g. cycle:5 or lemma41:4,3,2");
}

void add_run_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field, "coefficient field: 2, 32003, or Q")->capture_default_str();
    cmd->add_option("--cap", o.cap, "vertex cap for the homology oracle")->capture_default_str();
    cmd->add_option("--workers", o.workers, "oracle worker threads (0 = auto)")->capture_default_str();
}

void add_format_opt(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_flag("--timings", o.timings, "include wall-clock timings (breaks byte determinism)");
}

Graph load_graph(const CommonOpts& o) {
    if (!o.input.empty() && !o.spec.empty()) throw ParseError("give --input or --spec, not both");
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw ParseError("cannot open '" + o.input + "'");
        return read_edge_list(in);
    }
    if (!o.spec.empty()) return graph_from_spec(o.spec);
    throw ParseError("need --input FILE or --spec SPEC");
}

std::string input_label(const CommonOpts& o) { return o.spec.empty() ? "file:" + o.input : o.spec; }

// ---- analyze ----

int run_analyze(const CommonOpts& o) {
    Graph g = load_graph(o);
    InvariantReport rep = invariant_report(g);
    ClassCertificate cm = is_cm_cactus_indecomposable(g);
    ClassCertificate t44 = theorem44_class_check(g);
    bool cor45 = corollary45_applies(g);
    bool have_chain = false;
    std::vector<std::string> chain;
    try {
        ChainStructure cs = chain_structure(g);
        have_chain = true;
        for (const auto& b : cs.blocks) chain.push_back(b.kind.describe());
    } catch (const NotAChain&) {
    }

    if (o.format == "json") {
        ordered_json out = to_json(rep);
        out["cm_cactus"] = cm.ok;
        if (!cm.ok) out["cm_cactus_violation"] = cm.first_violation;
        out["theorem44_class"] = t44.ok;
        if (!t44.ok) out["theorem44_violation"] = t44.first_violation;
        out["corollary45"] = cor45;
        out["chain"] = have_chain ? ordered_json(chain) : ordered_json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << report_csv_header() << ",cm_cactus,theorem44_class,corollary45\n";
        std::cout << report_csv_row(rep) << "," << (cm.ok ? "true" : "false") << ","
                  << (t44.ok ? "true" : "false") << "," << (cor45 ? "true" : "false") << "\n";
    } else {
        std::printf("n            = %d\n", rep.n);
        std::printf("blocks       = %d\n", rep.block_count);
        std::printf("c            = %d  (maximal cliques)\n", rep.c);
        std::printf("c'           = %d  (maximal cliques outside big cycles)\n", rep.c_prime);
        std::printf("cycles       = %s\n",
                    packed_cycle_counts(rep).empty() ? "-" : packed_cycle_counts(rep).c_str());
        std::printf("big cycles   = %d\n", rep.big_c);
        std::printf("bound        = %d  (c' + sum (k-2)*c_k)\n", rep.paper_bound);
        std::printf("clique bound = %d  (c)\n", rep.smk_bound);
        std::printf("block graph  = %s\n", rep.is_block_graph ? "yes" : "no");
        std::printf("cactus       = %s\n", rep.is_cactus ? "yes" : "no");
        std::printf("cycle-clique = %s\n", rep.is_cycle_clique ? "yes" : "no");
        std::printf("indecomposable = %s\n", rep.is_indecomposable ? "yes" : "no");
        if (cm.ok)
            std::printf("cm-cactus    = yes\n");
        else
            std::printf("cm-cactus    = no  (%s)\n", cm.first_violation.c_str());
        if (t44.ok)
            std::printf("c4-chain class = yes (exact reg %d)\n", exact_reg_theorem44(g));
        else
            std::printf("c4-chain class = no  (%s)\n", t44.first_violation.c_str());
        std::printf("corollary45  = %s\n", cor45 ? "yes" : "no");
        if (have_chain) {
            std::string joined;
            for (size_t i = 0; i < chain.size(); ++i) {
                if (i) joined += " - ";
                joined += chain[i];
            }
            std::printf("chain        = %s\n", joined.c_str());
        }
    }
    return 0;
}

// ---- reg ----

int run_reg(const CommonOpts& o) {
    Graph g = load_graph(o);
    RegularityConfig cfg;
    cfg.field = parse_field(o.field);
    cfg.vertex_cap = o.cap;
    cfg.workers = o.workers;
    auto start = std::chrono::steady_clock::now();
    RegularityResult r = regularity(g, cfg);
    long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    if (o.format == "json") {
        ordered_json out{{"reg", r.value}, {"method", r.method}};
        if (o.timings) out["elapsed_ms"] = ms;
        std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "reg,method\n" << r.value << "," << r.method << "\n";
    } else {
        std::printf("reg    = %d\n", r.value);
        std::printf("method = %s\n", r.method.c_str());
        if (o.timings) std::printf("elapsed_ms = %lld\n", ms);
    }
    return 0;
}

// ---- shared generation for verify/gen ----

struct GenParams {
    std::string kind = "random-cycle-clique";
    int count = 100;
    std::uint64_t seed = 1;
    int min_blocks = 1;
    int max_blocks = 4;
    int max_vertices = 8;
    int min_len = 1;
    int max_len = 4;
    std::string placements = "adjacent";
    std::string palette;
};

void add_gen_opts(CLI::App* cmd, GenParams& p, bool with_count) {
    cmd->add_option("--kind", p.kind, "random-cactus, random-cycle-clique, or chain-enum")
        ->check(CLI::IsMember({"random-cactus", "random-cycle-clique", "chain-enum"}))
        ->capture_default_str();
    if (with_count) cmd->add_option("--count", p.count, "number of random graphs")->capture_default_str();
    cmd->add_option("--seed", p.seed, "random seed")->capture_default_str();
    cmd->add_option("--min-blocks", p.min_blocks, "minimum blocks per random graph")->capture_default_str();
    cmd->add_option("--max-blocks", p.max_blocks, "maximum blocks per random graph")->capture_default_str();
    cmd->add_option("--max-vertices", p.max_vertices, "vertex budget")->capture_default_str();
    cmd->add_option("--min-len", p.min_len, "chain-enum: minimum chain length")->capture_default_str();
    cmd->add_option("--max-len", p.max_len, "chain-enum: maximum chain length")->capture_default_str();
    cmd->add_option("--placements", p.placements, "chain-enum cycle cut points: adjacent or all")
        ->check(CLI::IsMember({"adjacent", "all"}))
        ->capture_default_str();
    cmd->add_option("--palette", p.palette,
                    "comma-separated block tokens, e.g. K2,K3,C4 (default depends on kind)");
}

std::vector<ChainToken> parse_palette(const std::string& text) {
    std::vector<ChainToken> palette;
    for (const auto& part : cactusreg::detail::split(text, ','))
        palette.push_back(cactusreg::detail::parse_chain_token(part));
    return palette;
}

std::vector<std::pair<std::string, Graph>> generate_graphs(const GenParams& p) {
    std::vector<std::pair<std::string, Graph>> out;
    if (p.kind == "chain-enum") {
        std::vector<ChainToken> palette =
            p.palette.empty() ? std::vector<ChainToken>{{false, 2, 1}, {false, 3, 1}, {true, 4, 1}}
                              : parse_palette(p.palette);
        auto chains = chain_enumeration(p.min_len, p.max_len, p.max_vertices, palette,
                                        p.placements == "all" ? ChainPlacements::All
                                                              : ChainPlacements::Adjacent);
        for (const auto& c : chains) out.emplace_back(chain_spec_string(c), build_chain(c));
        return out;
    }
    std::vector<ChainToken> palette;
    if (!p.palette.empty())
        palette = parse_palette(p.palette);
    else if (p.kind == "random-cactus")
        palette = default_cactus_palette();
    else
        palette = default_cycle_clique_palette();
    if (p.kind == "random-cactus")
        for (const auto& tok : palette)
            if (!tok.is_cycle && tok.size > 3)
                throw ParseError("random-cactus palette cannot contain cliques above K3");
    GenConfig cfg;
    cfg.min_blocks = p.min_blocks;
    cfg.max_blocks = p.max_blocks;
    cfg.max_vertices = p.max_vertices;
    cfg.palette = palette;
    std::mt19937_64 rng(p.seed);
    for (int i = 0; i < p.count; ++i) {
        Graph g = random_block_sum_graph(cfg, rng);
        out.emplace_back(p.kind + "[seed=" + std::to_string(p.seed) + "]#" + std::to_string(i), g);
    }
    return out;
}

// ---- verify ----

int run_verify(const CommonOpts& o, const GenParams& p) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (!o.input.empty() || !o.spec.empty())
        graphs.emplace_back(input_label(o), load_graph(o));
    else
        graphs = generate_graphs(p);

    RegularityConfig cfg;
    cfg.field = parse_field(o.field);
    cfg.vertex_cap = o.cap;
    cfg.workers = o.workers;

    std::vector<VerificationRecord> records;
    int violations = 0;
    int equalities = 0;
    for (const auto& [spec, g] : graphs) {
        VerificationRecord rec;
        rec.spec = spec;
        rec.report = invariant_report(g);
        RegularityResult r = regularity(g, cfg);
        rec.reg = r.value;
        rec.method = r.method;
        rec.bound_satisfied =
            rec.reg <= rec.report.paper_bound && rec.report.paper_bound <= rec.report.smk_bound;
        rec.equality = rec.reg == rec.report.paper_bound;
        if (!rec.bound_satisfied) ++violations;
        if (rec.equality) ++equalities;
        records.push_back(std::move(rec));
    }

    if (o.format == "json") {
        ordered_json recs = ordered_json::array();
        for (const auto& rec : records) recs.push_back(to_json(rec));
        ordered_json out{{"records", recs},
                         {"summary",
                          ordered_json{{"graphs", records.size()},
                                       {"violations", violations},
                                       {"equalities", equalities}}}};
        std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << verification_csv_header() << "\n";
        for (const auto& rec : records) std::cout << verification_csv_row(rec) << "\n";
        std::cout << "# graphs=" << records.size() << " violations=" << violations
                  << " equalities=" << equalities << "\n";
    } else {
        for (const auto& rec : records)
            std::printf("%-40s n=%2d reg=%2d (%s) bound=%2d clique-bound=%2d %s%s\n", rec.spec.c_str(),
                        rec.report.n, rec.reg, rec.method.c_str(), rec.report.paper_bound,
                        rec.report.smk_bound, rec.bound_satisfied ? "ok" : "VIOLATION",
                        rec.equality ? " =" : "");
        std::printf("graphs=%zu violations=%d equalities=%d\n", records.size(), violations, equalities);
    }
    return violations > 0 ? kExitViolation : 0;
}

// ---- gen ----

int run_gen(const CommonOpts& o, const GenParams& p) {
    auto graphs = generate_graphs(p);
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [spec, g] : graphs) {
            ordered_json edges = ordered_json::array();
            for (const auto& [u, v] : g.edges) edges.push_back(ordered_json::array({u, v}));
            arr.push_back(ordered_json{{"spec", spec}, {"n", g.n}, {"edges", edges}});
        }
        std::cout << ordered_json{{"graphs", arr}}.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "index,spec,n,m,edges\n";
        for (size_t i = 0; i < graphs.size(); ++i) {
            const auto& [spec, g] = graphs[i];
            std::string packed;
            for (const auto& [u, v] : g.edges) {
                if (!packed.empty()) packed += '|';
                packed += std::to_string(u) + "-" + std::to_string(v);
            }
            std::cout << i << "," << spec << "," << g.n << "," << g.edges.size() << "," << packed
                      << "\n";
        }
    } else {
        for (size_t i = 0; i < graphs.size(); ++i) {
            if (i) std::cout << "\n";
            write_edge_list(std::cout, graphs[i].second);
        }
    }
    return 0;
}

// ---- repro ----

int run_repro(const CommonOpts& o, bool stretch) {
    ReproOptions opts;
    opts.stretch = stretch;
    opts.field = parse_field(o.field);
    opts.workers = o.workers;
    auto rows = repro_rows(opts);
    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.pass;

    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r{{"name", row.name},
                           {"spec", row.spec},
                           {"expected", row.expected},
                           {"got", row.got},
                           {"bound", row.bound == -1 ? ordered_json(nullptr) : ordered_json(row.bound)},
                           {"pass", row.pass}};
            if (o.timings) r["elapsed_ms"] = row.elapsed_ms;
            arr.push_back(r);
        }
        std::cout << ordered_json{{"rows", arr}, {"all_pass", all_pass}}.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "name,spec,expected,got,bound,pass\n";
        for (const auto& row : rows) {
            std::cout << row.name << "," << row.spec << "," << row.expected << "," << row.got << ",";
            if (row.bound != -1) std::cout << row.bound;
            std::cout << "," << (row.pass ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& row : rows) {
            std::printf("[%s] %-24s reg=%d expected=%d", row.pass ? "PASS" : "FAIL", row.name.c_str(),
                        row.got, row.expected);
            if (row.bound != -1) std::printf(" bound=%d", row.bound);
            if (o.timings) std::printf(" (%lld ms)", row.elapsed_ms);
            std::printf("\n");
        }
        std::printf("%s\n", all_pass ? "all rows pass" : "FAILURES present");
    }
    return all_pass ? 0 : kExitViolation;
}

// ---- family ----

int run_family(const std::string& which, const std::vector<int>& params, const std::string& chain) {
    Graph g;
    if (which == "lemma41" || which == "lemma42") {
        if (params.size() != 3) throw ParseError(which + " needs three parameters: k m1 m2");
        g = which == "lemma41" ? lemma41_family(params[0], params[1], params[2])
                               : lemma42_family(params[0], params[1], params[2]);
    } else if (which == "chain") {
        if (chain.empty())
            throw ParseError("chain needs tokens, e.g. family chain --tokens K2,C4,K3");
        g = graph_from_spec("chain:" + chain);
    } else {
        throw ParseError("unknown family '" + which + "' (expected lemma41, lemma42, or chain)");
    }
    write_edge_list(std::cout, g);
    return 0;
}

const char kFooter[] = R"(Graph specs:
  path:N  cycle:N  complete:N  diamond
  paper:G1  paper:G2
  lemma41:K,M1,M2   cycle C_K with K_M1 glued on a cycle edge and K_M2 at
                    one endpoint of that edge
  lemma42:K,M1,M2   cycle C_K with K_M1, K_M2 glued at two adjacent cycle
                    vertices
  chain:TOK,...     blocks glued in a row; TOK = K<m> | C<k> | C<k>@<d>
                    (d = distance between the two cut points on the cycle)
  sum:SPEC+SPEC@vertex  glue vertex 1 of each operand (@vertex optional)
  sum:SPEC+SPEC@edge    glue edge {1,2} of each operand

Edge-list format: optional "n m" header line, then one "u v" pair per
line; vertices are 1-based; '#' starts a comment.

CSV columns:
  analyze: n,block_count,c,c_prime,cycle_counts,big_c,paper_bound,
           smk_bound,is_block_graph,is_cactus,is_cycle_clique,
           is_indecomposable,cm_cactus,theorem44_class,corollary45
  verify:  spec,n,reg,method,paper_bound,smk_bound,bound_satisfied,equality
  repro:   name,spec,expected,got,bound,pass
  gen:     index,spec,n,m,edges

Exit codes: 0 ok, 2 parse error, 3 vertex cap exceeded, 4 bound violation
or failed repro row.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Regularity bounds and exact regularity for binomial edge ideals of cycle-clique graphs"};
    app.require_subcommand(1);
    app.footer(kFooter);

    CommonOpts o;
    GenParams p;
    bool stretch = false;
    std::string family_which;
    std::vector<int> family_params;
    std::string family_chain;

    auto* analyze = app.add_subcommand("analyze", "block structure, invariants, and class membership");
    add_io_opts(analyze, o);
    add_format_opt(analyze, o);

    auto* reg = app.add_subcommand("reg", "exact regularity with method provenance");
    add_io_opts(reg, o);
    add_run_opts(reg, o);
    add_format_opt(reg, o);

    auto* verify = app.add_subcommand("verify", "check reg <= bound <= clique bound on many graphs");
    add_io_opts(verify, o);
    add_run_opts(verify, o);
    add_format_opt(verify, o);
    add_gen_opts(verify, p, true);

    auto* gen = app.add_subcommand("gen", "emit generated graphs as edge lists");
    add_format_opt(gen, o);
    add_gen_opts(gen, p, true);

    auto* repro = app.add_subcommand("repro", "recheck the golden regularity table");
    add_run_opts(repro, o);
    add_format_opt(repro, o);
    repro->add_flag("--stretch", stretch, "include the 11-vertex stretch row");

    auto* family = app.add_subcommand("family", "emit a named family member as an edge list");
    family->add_option("which", family_which, "lemma41, lemma42, or chain")->required();
    family->add_option("params", family_params, "k m1 m2 for the lemma families");
    family->add_option("--tokens", family_chain, "chain tokens, e.g. K2,C4,K3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(o);
        if (app.got_subcommand(reg)) return run_reg(o);
        if (app.got_subcommand(verify)) return run_verify(o, p);
        if (app.got_subcommand(gen)) return run_gen(o, p);
        if (app.got_subcommand(repro)) return run_repro(o, stretch);
        if (app.got_subcommand(family)) return run_family(family_which, family_params, family_chain);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
