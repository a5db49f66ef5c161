#ifndef CACTUSREG_GRAPH_HPP
#define CACTUSREG_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactusreg/errors.hpp"

namespace cactusreg {

// Simple undirected graph on vertices 1..n. Instances are treated as
// immutable after construction; every operation builds a new graph and,
// where labels change, returns the relabeling map alongside.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, u < v in each pair
    std::vector<std::vector<int>> adj;       // adj[v] sorted ascending, index 0 unused

    bool has_edge(int u, int v) const {
        if (u < 1 || v < 1 || u > n || v > n || u == v) return false;
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} out of range 1.." + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n + 1, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

// Builders. Labels follow the usual conventions: the path uses edges
// {i,i+1}, the cycle closes with {1,n}, and the diamond is the 4-cycle
// plus the chord {1,3}.
inline Graph path(int n) {
    if (n < 1) throw GraphError("path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    return make_graph(n, std::move(e));
}

inline Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({1, n});
    return make_graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    if (n < 3) throw GraphError("complete requires n >= 3 (use path(2) for a single edge)");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
    return make_graph(n, std::move(e));
}

inline Graph diamond() {
    auto g = cycle(4);
    auto e = g.edges;
    e.push_back({1, 3});
    return make_graph(4, std::move(e));
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n + 1, 0);
    int next = 0;
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.n; ++s) {
        if (comp[s]) continue;
        comp[s] = ++next;
        std::vector<int> stack{s}, verts{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (!comp[w]) {
                    comp[w] = next;
                    stack.push_back(w);
                    verts.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// A graph together with its labels' origin: to_original[new] = old label
// (index 0 unused), from_original[old] = new label or 0 when dropped.
struct RelabeledGraph {
    Graph graph;
    std::vector<int> to_original;
    std::vector<int> from_original;
};

inline RelabeledGraph induced_subgraph(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 1 || v > g.n) throw GraphError("induced_subgraph: vertex out of range");
    RelabeledGraph out;
    out.to_original.assign(keep.size() + 1, 0);
    out.from_original.assign(g.n + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) {
        out.to_original[i + 1] = keep[i];
        out.from_original[keep[i]] = static_cast<int>(i + 1);
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (out.from_original[u] && out.from_original[v])
            e.push_back({out.from_original[u], out.from_original[v]});
    out.graph = make_graph(static_cast<int>(keep.size()), std::move(e));
    return out;
}

inline RelabeledGraph delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n) throw GraphError("delete_vertex: vertex out of range");
    std::vector<int> keep;
    for (int u = 1; u <= g.n; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

// Completes the neighborhood of v: adds every missing edge between two
// neighbors of v. Labels are unchanged.
inline Graph neighborhood_complete(const Graph& g, int v) {
    if (v < 1 || v > g.n) throw GraphError("neighborhood_complete: vertex out of range");
    auto e = g.edges;
    const auto& nb = g.adj[v];
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) e.push_back({nb[i], nb[j]});
    return make_graph(g.n, std::move(e));
}

struct CliqueSumResult {
    Graph graph;
    std::vector<int> map_first;   // identity map for the first summand
    std::vector<int> map_second;  // second summand's labels -> labels in the sum
};

// Glues g2 onto g1 by identifying glue2[i] with glue1[i]. Both glue sets
// must induce complete subgraphs (a clique sum). Empty glue sets give the
// disjoint union. g1 keeps its labels; the remaining vertices of g2 are
// appended in ascending label order.
inline CliqueSumResult clique_sum(const Graph& g1, const Graph& g2,
                                  const std::vector<int>& glue1,
                                  const std::vector<int>& glue2) {
    if (glue1.size() != glue2.size()) throw GraphError("clique_sum: glue size mismatch");
    auto check_glue = [](const Graph& g, const std::vector<int>& glue, const char* side) {
        std::vector<int> s = glue;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw GraphError(std::string("clique_sum: duplicate vertex in ") + side + " glue set");
        for (int v : s)
            if (v < 1 || v > g.n) throw GraphError(std::string("clique_sum: ") + side + " glue vertex out of range");
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j]))
                    throw GraphError(std::string("clique_sum: ") + side + " glue set is not a clique");
    };
    check_glue(g1, glue1, "first");
    check_glue(g2, glue2, "second");

    CliqueSumResult out;
    out.map_first.assign(g1.n + 1, 0);
    for (int v = 1; v <= g1.n; ++v) out.map_first[v] = v;
    out.map_second.assign(g2.n + 1, 0);
    for (size_t i = 0; i < glue2.size(); ++i) out.map_second[glue2[i]] = glue1[i];
    int next = g1.n;
    for (int v = 1; v <= g2.n; ++v)
        if (!out.map_second[v]) out.map_second[v] = ++next;

    std::vector<std::pair<int, int>> e = g1.edges;
    for (auto [u, v] : g2.edges) e.push_back({out.map_second[u], out.map_second[v]});
    out.graph = make_graph(next, std::move(e));
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_GRAPH_HPP
