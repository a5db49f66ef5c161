#include <catch2/catch_amalgamated.hpp>

#include "cactusreg/hochster.hpp"
#include "cactusreg/spec_parse.hpp"

using namespace cactusreg;

static int reg_of(const Graph& g, const char* field = "32003", int cap = 9) {
    HochsterConfig cfg;
    cfg.field = parse_field(field);
    cfg.vertex_cap = cap;
    return regularity_hochster(g, cfg);
}

TEST_CASE("known regularities") {
    REQUIRE(reg_of(path(2)) == 1);
    REQUIRE(reg_of(path(3)) == 2);
    REQUIRE(reg_of(path(5)) == 4);
    REQUIRE(reg_of(complete_graph(3)) == 1);
    REQUIRE(reg_of(complete_graph(5)) == 1);
    REQUIRE(reg_of(cycle(4)) == 2);
    REQUIRE(reg_of(cycle(5)) == 3);
    REQUIRE(reg_of(cycle(6)) == 4);
    REQUIRE(reg_of(diamond()) == 2);
    REQUIRE(reg_of(graph_from_spec("chain:K3,C4,K3")) == 4);
}

TEST_CASE("edgeless graphs have regularity zero") {
    REQUIRE(reg_of(make_graph(3, {})) == 0);
    REQUIRE(reg_of(make_graph(0, {})) == 0);
}

TEST_CASE("regularity adds over connected components") {
    Graph two = clique_sum(path(3), path(3), {}, {}).graph;  // disjoint union
    REQUIRE(reg_of(two) == 4);
    Graph mixed = clique_sum(cycle(4), complete_graph(3), {}, {}).graph;
    REQUIRE(reg_of(mixed) == 3);
}

TEST_CASE("isolated vertices change nothing") {
    Graph padded = make_graph(6, {{1, 2}, {2, 3}, {3, 4}});  // P4 plus two isolated
    REQUIRE(reg_of(padded) == 3);
}

TEST_CASE("field independence on small graphs") {
    for (const char* spec : {"cycle:5", "path:4", "complete:4", "diamond"}) {
        Graph g = graph_from_spec(spec);
        int a = reg_of(g, "32003");
        REQUIRE(reg_of(g, "2") == a);
        REQUIRE(reg_of(g, "Q") == a);
    }
}

TEST_CASE("worker count does not change the answer") {
    Graph g = graph_from_spec("paper:G2");
    HochsterConfig cfg;
    cfg.workers = 3;
    REQUIRE(regularity_hochster(g, cfg) == 6);
    HochsterStats stats;
    HochsterConfig one;
    one.workers = 1;
    REQUIRE(regularity_hochster(g, one, &stats) == 6);
    REQUIRE(stats.homology_runs > 0);
    REQUIRE(stats.candidate_subsets >= stats.homology_runs);
}

TEST_CASE("vertex caps") {
    HochsterConfig cfg;
    cfg.vertex_cap = 4;
    REQUIRE_THROWS_AS(regularity_hochster(path(5), cfg), CapExceeded);
    HochsterConfig wide;
    wide.vertex_cap = 40;  // clamped to the hard ceiling
    try {
        regularity_hochster(path(12), wide);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        REQUIRE(std::string(e.what()).find("11") != std::string::npos);
    }
}
