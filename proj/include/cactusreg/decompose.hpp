#ifndef CACTUSREG_DECOMPOSE_HPP
#define CACTUSREG_DECOMPOSE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "cactusreg/cliques.hpp"
#include "cactusreg/graph.hpp"

namespace cactusreg {

namespace detail {

// A graph splits as G1 union G2 over a single vertex v, with v simplicial
// in both sides, exactly when G - v has two components and each one's
// attachment N(v) inside it is a clique. (Each side must be one whole
// component plus v: neighbors in different components are never adjacent,
// so a side spanning two components can't give v a clique neighborhood.)
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> split_sides(const Graph& g) {
    for (int v = 1; v <= g.n; ++v) {
        if (g.degree(v) == 0) continue;
        std::vector<int> rest;
        for (int u = 1; u <= g.n; ++u)
            if (u != v && g.degree(u) > 0) rest.push_back(u);
        auto sub = induced_subgraph(g, rest);
        auto comps = components(sub.graph);
        if (comps.size() != 2) continue;
        bool ok = true;
        for (const auto& comp : comps) {
            std::vector<int> attach;
            for (int u : comp) {
                int orig = sub.to_original[u];
                if (g.has_edge(v, orig)) attach.push_back(orig);
            }
            for (size_t i = 0; i < attach.size() && ok; ++i)
                for (size_t j = i + 1; j < attach.size() && ok; ++j)
                    if (!g.has_edge(attach[i], attach[j])) ok = false;
            if (!ok) break;
        }
        if (!ok) continue;
        std::vector<int> side1{v}, side2{v};
        for (int u : comps[0]) side1.push_back(sub.to_original[u]);
        for (int u : comps[1]) side2.push_back(sub.to_original[u]);
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
        return std::make_pair(side1, side2);
    }
    return std::nullopt;
}

}  // namespace detail

inline bool is_indecomposable(const Graph& g) {
    return is_connected(g) && !detail::split_sides(g).has_value();
}

// Repeatedly splits at vertices where both sides see a clique, until every
// piece admits no further split. Components of a disconnected input are
// processed independently. Pieces come back relabeled 1..|piece| with maps
// to the input's labels, ordered by smallest original label.
inline std::vector<RelabeledGraph> decompose_at_simplicial_cut_vertices(const Graph& g) {
    std::vector<RelabeledGraph> pieces;
    std::vector<RelabeledGraph> work;
    for (const auto& comp : components(g)) work.push_back(induced_subgraph(g, comp));

    while (!work.empty()) {
        RelabeledGraph cur = std::move(work.back());
        work.pop_back();
        auto split = detail::split_sides(cur.graph);
        if (!split) {
            pieces.push_back(std::move(cur));
            continue;
        }
        for (const auto& side : {split->first, split->second}) {
            auto sub = induced_subgraph(cur.graph, side);
            RelabeledGraph mapped;
            mapped.graph = sub.graph;
            mapped.to_original.assign(sub.graph.n + 1, 0);
            for (int v = 1; v <= sub.graph.n; ++v)
                mapped.to_original[v] = cur.to_original[sub.to_original[v]];
            mapped.from_original.assign(g.n + 1, 0);
            for (int v = 1; v <= sub.graph.n; ++v) mapped.from_original[mapped.to_original[v]] = v;
            work.push_back(std::move(mapped));
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const RelabeledGraph& a, const RelabeledGraph& b) {
        std::vector<int> va(a.to_original.begin() + 1, a.to_original.end());
        std::vector<int> vb(b.to_original.begin() + 1, b.to_original.end());
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        return va < vb;
    });
    return pieces;
}

}  // namespace cactusreg

#endif  // CACTUSREG_DECOMPOSE_HPP
