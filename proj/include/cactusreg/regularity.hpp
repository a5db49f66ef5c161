#ifndef CACTUSREG_REGULARITY_HPP
#define CACTUSREG_REGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cactusreg/cm_cactus.hpp"
#include "cactusreg/hochster.hpp"

namespace cactusreg {

struct RegularityConfig {
    FieldSpec field{};
    int vertex_cap = 9;
    int workers = 0;
};

struct RegularityResult {
    int value = 0;
    std::string method;  // per-piece tags joined with '+'
};

namespace detail {

inline bool is_complete_shape(const Graph& g) {
    return g.n >= 2 && g.edge_count() == g.n * (g.n - 1) / 2;
}

inline bool is_path_shape(const Graph& g) {
    if (g.edge_count() != g.n - 1 || !is_connected(g)) return false;
    for (int v = 1; v <= g.n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// Chain [clique, C_k (k>=4), clique] with the two cut points adjacent on
// the cycle: regularity is k-1 when both cliques are edges, else k.
inline std::optional<int> cycle_between_cliques_reg(const Graph& g) {
    ChainStructure cs;
    try {
        cs = chain_structure(g);
    } catch (const NotAChain&) {
        return std::nullopt;
    }
    if (cs.length() != 3) return std::nullopt;
    int m1 = cs.blocks[0].kind.clique_size_or_zero();
    int m2 = cs.blocks[2].kind.clique_size_or_zero();
    const auto& mid = cs.blocks[1].kind;
    if (m1 < 2 || m2 < 2 || mid.tag != BlockTag::Cycle) return std::nullopt;
    if (!g.has_edge(cs.cut_vertices[0], cs.cut_vertices[1])) return std::nullopt;
    return lemma42_reg(mid.size, m1, m2);
}

// Two blocks, one a clique K_{m2} attached at v, the other a cycle C_k
// with one edge {u,w} thickened to a clique K_{m1} (m1 >= 3), with
// v in {u,w}: regularity is k-1 when m2 = 2, else k.
inline std::optional<int> cycle_edge_clique_reg(const Graph& g) {
    auto t = block_cut_tree(g);
    if (t.blocks.size() != 2 || t.cut_vertices.size() != 1) return std::nullopt;
    auto kinds = classify_blocks(g, t);
    int other = -1, clique = -1;
    for (int b = 0; b < 2; ++b) {
        if (kinds[b].tag == BlockTag::Other) other = b;
        if (kinds[b].clique_size_or_zero() >= 2) clique = b;
    }
    if (other < 0 || clique < 0) return std::nullopt;
    int m2 = kinds[clique].clique_size_or_zero();
    int cut = t.cut_vertices[0];

    auto sub = induced_subgraph(g, t.blocks[other]);
    const Graph& h = sub.graph;
    int cut_h = sub.from_original[cut];
    for (const auto& q : maximal_cliques(h)) {
        if (q.size() < 3) continue;
        std::vector<int> rest;
        for (int v = 1; v <= h.n; ++v)
            if (!std::binary_search(q.begin(), q.end(), v)) rest.push_back(v);
        if (rest.empty()) continue;
        long expected = static_cast<long>(q.size()) * (static_cast<long>(q.size()) - 1) / 2 +
                        static_cast<long>(rest.size()) + 1;
        if (h.edge_count() != expected) continue;
        bool degrees_ok = true;
        for (int r : rest)
            if (h.degree(r) != 2) degrees_ok = false;
        if (!degrees_ok) continue;
        auto rsub = induced_subgraph(h, rest);
        if (!is_path_shape(rsub.graph)) continue;
        // attachment vertices of the path ends in the clique
        std::vector<int> attach;
        for (int r : rest)
            for (int u : h.neighbors(r))
                if (std::binary_search(q.begin(), q.end(), u)) attach.push_back(u);
        if (attach.size() != 2 || attach[0] == attach[1]) continue;
        if (cut_h != attach[0] && cut_h != attach[1]) continue;
        int k = static_cast<int>(rest.size()) + 2;
        return lemma41_reg(k, static_cast<int>(q.size()), m2);
    }
    return std::nullopt;
}

inline std::pair<int, std::string> piece_regularity(const Graph& g, const RegularityConfig& cfg) {
    if (g.edge_count() == 0) return {0, "zero"};
    if (is_complete_shape(g)) return {1, "complete"};
    if (is_path_shape(g)) return {g.n - 1, "path"};
    if (matches_theorem44_class(g)) return {exact_reg_theorem44(g), "c4-chain"};
    if (auto r = cycle_between_cliques_reg(g)) return {*r, "cycle-between-cliques"};
    if (auto r = cycle_edge_clique_reg(g)) return {*r, "cycle-edge-clique"};
    HochsterConfig hc{cfg.field, cfg.vertex_cap, cfg.workers};
    return {regularity_hochster(g, hc), "hochster"};
}

}  // namespace detail

// reg(S/J_G): split into connected components and further at simplicial
// cut vertices (regularity adds over both), answer each piece by closed
// formula when its class is recognized, otherwise by the Hochster
// oracle.
inline RegularityResult regularity(const Graph& g, const RegularityConfig& cfg = {}) {
    RegularityResult out;
    for (const auto& piece : decompose_at_simplicial_cut_vertices(g)) {
        auto [value, method] = detail::piece_regularity(piece.graph, cfg);
        out.value += value;
        if (method != "zero") out.method += (out.method.empty() ? "" : "+") + method;
    }
    if (out.method.empty()) out.method = "zero";
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_REGULARITY_HPP
