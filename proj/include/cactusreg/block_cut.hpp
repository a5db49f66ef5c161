#ifndef CACTUSREG_BLOCK_CUT_HPP
#define CACTUSREG_BLOCK_CUT_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cactusreg/graph.hpp"

namespace cactusreg {

enum class BlockTag { Edge, Clique, Cycle, Other };

// Classification of one block: Edge, Clique(size) with size >= 3,
// Cycle(size) with size >= 4, or Other. A triangle always classifies as
// Clique(3), never Cycle(3).
struct BlockKind {
    BlockTag tag = BlockTag::Other;
    int size = 0;

    bool is_edge() const { return tag == BlockTag::Edge; }
    bool is_clique(int m = 0) const { return tag == BlockTag::Clique && (m == 0 || size == m); }
    bool is_cycle(int k = 0) const { return tag == BlockTag::Cycle && (k == 0 || size == k); }
    // Treats an edge as the 2-clique for checks like "K_m with m >= 2".
    int clique_size_or_zero() const {
        if (tag == BlockTag::Edge) return 2;
        if (tag == BlockTag::Clique) return size;
        return 0;
    }
    std::string describe() const {
        switch (tag) {
            case BlockTag::Edge: return "K2";
            case BlockTag::Clique: return "K" + std::to_string(size);
            case BlockTag::Cycle: return "C" + std::to_string(size);
            default: return "Other(" + std::to_string(size) + ")";
        }
    }
};

// Blocks (maximal 2-connected subgraphs plus bridge edges) and cut
// vertices. Blocks are canonically sorted by their vertex lists, so ids
// are deterministic. Isolated vertices belong to no block.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;         // sorted vertex lists
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::vector<int>> vertex_blocks;  // vertex -> ids of blocks containing it

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
    const std::vector<int>& blocks_containing(int v) const { return vertex_blocks[v]; }
    std::vector<int> cut_vertices_of_block(int id) const {
        std::vector<int> out;
        for (int v : blocks[id])
            if (is_cut_vertex(v)) out.push_back(v);
        return out;
    }
};

// Lowpoint DFS with an edge stack (the classical linear-time algorithm).
inline BlockCutTree block_cut_tree(const Graph& g) {
    BlockCutTree t;
    std::vector<int> disc(g.n + 1, 0), low(g.n + 1, 0);
    std::vector<char> cut(g.n + 1, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int w : g.adj[u]) {
            if (w == parent) continue;
            if (!disc[w]) {
                estack.push_back({u, w});
                ++children;
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (parent != 0 && low[w] >= disc[u]) cut[u] = 1;
                if (low[w] >= disc[u]) {
                    std::vector<int> verts;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                        if (e.first == u && e.second == w) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    t.blocks.push_back(std::move(verts));
                }
            } else if (disc[w] < disc[u]) {
                estack.push_back({u, w});
                low[u] = std::min(low[u], disc[w]);
            }
        }
        if (parent == 0 && children > 1) cut[u] = 1;
    };

    for (int v = 1; v <= g.n; ++v)
        if (!disc[v] && g.degree(v) > 0) dfs(v, 0);

    std::sort(t.blocks.begin(), t.blocks.end());
    for (int v = 1; v <= g.n; ++v)
        if (cut[v]) t.cut_vertices.push_back(v);
    t.vertex_blocks.assign(g.n + 1, {});
    for (size_t id = 0; id < t.blocks.size(); ++id)
        for (int v : t.blocks[id]) t.vertex_blocks[v].push_back(static_cast<int>(id));
    return t;
}

// Classifies a vertex set that is already known to be a block of g.
// Distinct blocks share at most one vertex, so the induced subgraph on a
// block's vertices carries exactly the block's edges.
inline BlockKind classify_block_unchecked(const Graph& g, const std::vector<int>& block) {
    int s = static_cast<int>(block.size());
    if (s == 2) return {BlockTag::Edge, 2};
    int edges = 0;
    bool complete = true;
    std::vector<int> deg(block.size(), 0);
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j) {
            if (g.has_edge(block[i], block[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            } else {
                complete = false;
            }
        }
    if (complete) return {BlockTag::Clique, s};
    if (s >= 4 && edges == s &&
        std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
        return {BlockTag::Cycle, s};
    return {BlockTag::Other, s};
}

inline BlockKind classify_block(const Graph& g, std::vector<int> block) {
    std::sort(block.begin(), block.end());
    auto t = block_cut_tree(g);
    if (!std::binary_search(t.blocks.begin(), t.blocks.end(), block))
        throw GraphError("classify_block: vertex set is not a block of the graph");
    return classify_block_unchecked(g, block);
}

inline std::vector<BlockKind> classify_blocks(const Graph& g, const BlockCutTree& t) {
    std::vector<BlockKind> kinds;
    kinds.reserve(t.blocks.size());
    for (const auto& b : t.blocks) kinds.push_back(classify_block_unchecked(g, b));
    return kinds;
}

}  // namespace cactusreg

#endif  // CACTUSREG_BLOCK_CUT_HPP
