#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cactusreg/graph.hpp"
#include "cactusreg/graph_io.hpp"

using namespace cactusreg;

TEST_CASE("make_graph normalizes edges") {
    Graph g = make_graph(3, {{2, 1}, {1, 2}, {3, 2}});
    REQUIRE(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(1, 3));
    REQUIRE(g.degree(2) == 2);
    REQUIRE(g.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("make_graph rejects bad input") {
    REQUIRE_THROWS_AS(make_graph(2, {{1, 1}}), GraphError);
    REQUIRE_THROWS_AS(make_graph(2, {{0, 1}}), GraphError);
    REQUIRE_THROWS_AS(make_graph(2, {{1, 3}}), GraphError);
    REQUIRE_THROWS_AS(make_graph(-1, {}), GraphError);
}

TEST_CASE("builders") {
    REQUIRE(path(1).n == 1);
    REQUIRE(path(1).edge_count() == 0);
    REQUIRE(path(4).edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    REQUIRE(cycle(4).edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    REQUIRE(complete_graph(4).edge_count() == 6);
    REQUIRE(diamond().edge_count() == 5);
    REQUIRE_THROWS_AS(cycle(2), GraphError);
    REQUIRE_THROWS_AS(complete_graph(0), GraphError);
}

TEST_CASE("components and connectivity") {
    Graph g = make_graph(5, {{1, 2}, {4, 5}});
    auto comp = components(g);
    REQUIRE(comp.size() == 3);
    REQUIRE_FALSE(is_connected(g));
    REQUIRE(is_connected(path(5)));
    REQUIRE(is_connected(make_graph(1, {})));
}

TEST_CASE("induced subgraph relabels both ways") {
    Graph g = cycle(5);
    RelabeledGraph sub = induced_subgraph(g, {2, 3, 5});
    REQUIRE(sub.graph.n == 3);
    REQUIRE(sub.graph.edge_count() == 1);  // only {2,3} survives
    REQUIRE(sub.to_original.size() == 4);
    int a = sub.from_original[2], b = sub.from_original[3];
    REQUIRE(sub.graph.has_edge(a, b));
    REQUIRE(sub.to_original[a] == 2);
}

TEST_CASE("delete_vertex") {
    RelabeledGraph d = delete_vertex(path(3), 2);
    REQUIRE(d.graph.n == 2);
    REQUIRE(d.graph.edge_count() == 0);
    REQUIRE(d.to_original[1] == 1);
    REQUIRE(d.to_original[2] == 3);
}

TEST_CASE("clique_sum glues and validates") {
    Graph tri = complete_graph(3);
    auto bowtie = clique_sum(tri, tri, {1}, {1});
    REQUIRE(bowtie.graph.n == 5);
    REQUIRE(bowtie.graph.edge_count() == 6);
    auto dia = clique_sum(tri, tri, {1, 3}, {1, 3});
    REQUIRE(dia.graph == diamond());  // triangles sharing edge {1,3}
    REQUIRE(dia.map_second[2] == 4);
    REQUIRE_THROWS_AS(clique_sum(path(3), tri, {1, 3}, {1, 2}), GraphError);
    auto disjoint = clique_sum(tri, path(2), {}, {});
    REQUIRE(disjoint.graph.n == 5);
    REQUIRE_FALSE(is_connected(disjoint.graph));
}

TEST_CASE("neighborhood_complete adds exactly the missing pairs") {
    Graph g = path(3);
    Graph h = neighborhood_complete(g, 2);
    REQUIRE(h.has_edge(1, 3));
    REQUIRE(h.edge_count() == 3);
    REQUIRE(neighborhood_complete(cycle(4), 1).has_edge(2, 4));
}

TEST_CASE("edge list round trip") {
    for (const Graph& g : {cycle(6), path(1), make_graph(4, {{1, 4}})}) {
        std::stringstream s;
        write_edge_list(s, g);
        Graph back = read_edge_list(s);
        REQUIRE(back == g);
    }
}

TEST_CASE("edge list header detection") {
    // with header: first line "3 2" announces 3 vertices, 2 edges
    Graph a = graph_from_edge_list_text("3 2\n1 2\n2 3\n");
    REQUIRE(a.n == 3);
    REQUIRE(a.edge_count() == 2);
    // without header: n = largest label
    Graph b = graph_from_edge_list_text("1 2\n2 3\n");
    REQUIRE(b.n == 3);
    REQUIRE(b.edge_count() == 2);
    // comments and blank lines; "2 1" is a header because 1 matches the
    // number of remaining data lines
    Graph c = graph_from_edge_list_text("# one edge\n\n2 1\n1 2\n");
    REQUIRE(c.n == 2);
    REQUIRE(c.edge_count() == 1);
    // same first line, one more edge line: no longer a header, and the
    // repeated {1,2} collapses
    Graph d = graph_from_edge_list_text("2 1\n1 2\n2 3\n");
    REQUIRE(d.n == 3);
    REQUIRE(d.edge_count() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
    std::istringstream bad("1 2\n2\n");
    try {
        read_edge_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
    REQUIRE_THROWS_AS(graph_from_edge_list_text("3 1\n1 7\n"), ParseError);
    REQUIRE_THROWS_AS(graph_from_edge_list_text("2 1\n1 1\n"), ParseError);
}
