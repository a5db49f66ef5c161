#ifndef CACTUSREG_CLIQUES_HPP
#define CACTUSREG_CLIQUES_HPP

#include <algorithm>
#include <vector>

#include "cactusreg/graph.hpp"

namespace cactusreg {

namespace detail {

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Bron-Kerbosch with pivoting. Input sets are sorted vectors; sizes here
// are small enough that set operations on vectors are fine.
inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int u : p) {
        int c = static_cast<int>(sorted_intersection(p, g.adj[u]).size());
        if (c > best) best = c, pivot = u;
    }
    for (int u : x) {
        int c = static_cast<int>(sorted_intersection(p, g.adj[u]).size());
        if (c > best) best = c, pivot = u;
    }
    std::vector<int> candidates;
    for (int v : p)
        if (pivot == -1 || !g.has_edge(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
        r.push_back(v);
        bron_kerbosch(g, r, sorted_intersection(p, g.adj[v]), sorted_intersection(x, g.adj[v]), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace detail

// All maximal cliques, each sorted, the list sorted lexicographically.
// An isolated vertex yields the singleton clique {v}.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<int> all;
    for (int v = 1; v <= g.n; ++v) all.push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    detail::bron_kerbosch(g, r, all, {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

// v is simplicial when its neighborhood induces a clique (equivalently,
// v lies in exactly one maximal clique).
inline bool is_simplicial(const Graph& g, int v) {
    if (v < 1 || v > g.n) throw GraphError("is_simplicial: vertex out of range");
    const auto& nb = g.adj[v];
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

inline bool is_internal(const Graph& g, int v) { return !is_simplicial(g, v); }

}  // namespace cactusreg

#endif  // CACTUSREG_CLIQUES_HPP
