#ifndef CACTUSREG_CM_CACTUS_HPP
#define CACTUSREG_CM_CACTUS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cactusreg/block_cut.hpp"
#include "cactusreg/decompose.hpp"
#include "cactusreg/graph.hpp"
#include "cactusreg/invariants.hpp"

namespace cactusreg {

struct ChainBlock {
    std::vector<int> vertices;  // sorted
    BlockKind kind;
    std::vector<int> cut_points;  // cut vertices of the graph lying in this block
};

// Block structure of a graph whose block graph is a path: blocks in path
// order, with the shared vertex between consecutive blocks.
struct ChainStructure {
    std::vector<ChainBlock> blocks;
    std::vector<int> cut_vertices;  // cut_vertices[i] = blocks[i]. blocks[i+1]
    bool block_graph_is_path = true;
    bool c4_cut_points_adjacent = true;  // every 4-cycle block: two cut points, adjacent

    int length() const { return static_cast<int>(blocks.size()); }
};

inline ChainStructure chain_structure(const Graph& g) {
    if (!is_connected(g)) throw NotAChain("graph is not connected");
    auto t = block_cut_tree(g);
    int l = static_cast<int>(t.blocks.size());

    std::vector<int> order;  // block ids along the path
    if (l == 1) {
        order = {0};
    } else {
        Graph bg = block_graph_of(g);
        bool path_shape = bg.edge_count() == bg.n - 1;
        for (int v = 1; v <= bg.n && path_shape; ++v)
            if (bg.degree(v) > 2) path_shape = false;
        if (!path_shape) throw NotAChain("block graph is not a path");
        int e1 = -1, e2 = -1;
        for (int v = 1; v <= bg.n; ++v)
            if (bg.degree(v) == 1) (e1 < 0 ? e1 : e2) = v;
        // lexicographically smaller endpoint block first
        int start = t.blocks[e1 - 1] <= t.blocks[e2 - 1] ? e1 : e2;
        int prev = -1, cur = start;
        while (true) {
            order.push_back(cur - 1);
            int next = -1;
            for (int u : bg.neighbors(cur))
                if (u != prev) next = u;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }

    ChainStructure cs;
    for (int id : order) {
        ChainBlock cb;
        cb.vertices = t.blocks[id];
        cb.kind = classify_block_unchecked(g, t.blocks[id]);
        for (int v : cb.vertices)
            if (t.is_cut_vertex(v)) cb.cut_points.push_back(v);
        cs.blocks.push_back(std::move(cb));
    }
    for (int i = 0; i + 1 < l; ++i) {
        std::vector<int> shared;
        std::set_intersection(cs.blocks[i].vertices.begin(), cs.blocks[i].vertices.end(),
                              cs.blocks[i + 1].vertices.begin(), cs.blocks[i + 1].vertices.end(),
                              std::back_inserter(shared));
        if (shared.size() != 1) throw NotAChain("consecutive blocks do not share exactly one vertex");
        cs.cut_vertices.push_back(shared[0]);
    }
    for (const auto& cb : cs.blocks) {
        if (!cb.kind.is_cycle(4)) continue;
        bool ok = cb.cut_points.size() == 2 && g.has_edge(cb.cut_points[0], cb.cut_points[1]);
        if (!ok) cs.c4_cut_points_adjacent = false;
    }
    return cs;
}

struct ClassCertificate {
    bool ok = true;
    std::string first_violation;  // empty when ok

    explicit operator bool() const { return ok; }
};

inline ClassCertificate class_fail(std::string why) { return {false, std::move(why)}; }

// The condition list characterizing indecomposable graphs whose binomial
// edge ideal is Cohen-Macaulay among cactus graphs: G is K2 or C3, or its
// blocks form a chain B_1..B_l with
//   (1) B_1, B_l in {C3, K2}
//   (2) B_2 = B_{l-1} = C4
//   (3) B_i in {C3, C4} for 3 <= i <= l-2, and a C3 there is followed by a C4
//   (4) each C4 has exactly two cut points and they are adjacent.
inline ClassCertificate is_cm_cactus_indecomposable(const Graph& g) {
    if (!is_connected(g)) return class_fail("graph is not connected");
    if (!is_cactus(g)) return class_fail("graph is not a cactus");
    if (!is_indecomposable(g)) return class_fail("graph is decomposable at a simplicial cut vertex");
    if (g.n == 2 && g.edge_count() == 1) return {};  // K2
    if (g.n == 3 && g.edge_count() == 3) return {};  // C3

    ChainStructure cs;
    try {
        cs = chain_structure(g);
    } catch (const NotAChain& e) {
        return class_fail(std::string("blocks do not form a chain: ") + e.what());
    }
    int l = cs.length();
    auto end_ok = [](const BlockKind& k) { return k.is_edge() || k.is_clique(3); };
    if (!end_ok(cs.blocks.front().kind) || !end_ok(cs.blocks.back().kind))
        return class_fail("condition (1): an end block is not C3 or K2");
    if (l < 3 || !cs.blocks[1].kind.is_cycle(4) || !cs.blocks[l - 2].kind.is_cycle(4))
        return class_fail("condition (2): second or second-to-last block is not C4");
    for (int i = 3; i <= l - 2; ++i) {
        const auto& k = cs.blocks[i - 1].kind;
        if (!k.is_clique(3) && !k.is_cycle(4))
            return class_fail("condition (3): block " + std::to_string(i) + " is not C3 or C4");
        if (k.is_clique(3) && !cs.blocks[i].kind.is_cycle(4))
            return class_fail("condition (3): C3 at position " + std::to_string(i) + " is not followed by C4");
    }
    if (!cs.c4_cut_points_adjacent)
        return class_fail("condition (4): a C4 lacks exactly two adjacent cut points");
    return {};
}

namespace detail {

inline ClassCertificate theorem44_oriented(const std::vector<BlockKind>& kinds) {
    int l = static_cast<int>(kinds.size());
    if (l < 3) return class_fail("chain has fewer than 3 blocks");
    if (kinds.front().clique_size_or_zero() < 2)
        return class_fail("first block is not a clique on >= 2 vertices");
    if (kinds.back().clique_size_or_zero() < 3)
        return class_fail("last block is not a clique on >= 3 vertices");
    if (!kinds[1].is_cycle(4) || !kinds[l - 2].is_cycle(4))
        return class_fail("second or second-to-last block is not C4");
    for (int i = 3; i <= l - 2; ++i)
        if (!kinds[i - 1].is_cycle(4) && kinds[i - 1].clique_size_or_zero() < 3)
            return class_fail("block " + std::to_string(i) + " is neither C4 nor a clique on >= 3 vertices");
    return {};
}

}  // namespace detail

// Class of the exact-regularity theorem for chains: B_1 = K_{m1>=2},
// B_l = K_{ml>=3}, B_2 = B_{l-1} = C4, interior blocks C4 or K_{m>=3},
// every C4 with exactly two adjacent cut points. Orientation of the chain
// does not matter. Indecomposability is checked explicitly since the
// chain conventions presume it.
inline ClassCertificate theorem44_class_check(const Graph& g) {
    if (!is_connected(g)) return class_fail("graph is not connected");
    ChainStructure cs;
    try {
        cs = chain_structure(g);
    } catch (const NotAChain& e) {
        return class_fail(std::string("blocks do not form a chain: ") + e.what());
    }
    std::vector<BlockKind> kinds;
    for (const auto& cb : cs.blocks) kinds.push_back(cb.kind);
    auto fwd = detail::theorem44_oriented(kinds);
    if (!fwd.ok) {
        std::reverse(kinds.begin(), kinds.end());
        auto bwd = detail::theorem44_oriented(kinds);
        if (!bwd.ok) return fwd;
    }
    if (!cs.c4_cut_points_adjacent)
        return class_fail("a C4 block lacks exactly two adjacent cut points");
    if (!is_indecomposable(g))
        return class_fail("graph is decomposable at a simplicial cut vertex");
    return {};
}

inline bool matches_theorem44_class(const Graph& g) { return theorem44_class_check(g).ok; }

// reg(S/J_G) = 2*c4(G) + c'(G) on the class above.
inline int exact_reg_theorem44(const Graph& g) {
    auto cert = theorem44_class_check(g);
    if (!cert.ok) throw ClassMismatch("not in the exact-regularity chain class: " + cert.first_violation);
    auto r = invariant_report(g);
    int c4 = 0;
    if (auto it = r.cycle_counts.find(4); it != r.cycle_counts.end()) c4 = it->second;
    return 2 * c4 + r.c_prime;
}

// Cohen-Macaulay indecomposable cactus whose chain starts or ends with a
// triangle; for these the bound 2*c4 + c' is the exact regularity.
inline bool corollary45_applies(const Graph& g) {
    if (!is_cm_cactus_indecomposable(g).ok) return false;
    if (g.n == 2 && g.edge_count() == 1) return false;  // K2: no triangle end
    if (g.n == 3 && g.edge_count() == 3) return true;   // C3
    auto cs = chain_structure(g);
    return cs.blocks.front().kind.is_clique(3) || cs.blocks.back().kind.is_clique(3);
}

// C_k with K_{m1} glued along the cycle edge {1,2} and K_{m2} glued at
// vertex 1. Cycle vertices 1..k; clique fill-ins ascending from k+1.
inline Graph lemma41_family(int k, int m1, int m2) {
    if (k < 3 || m1 < 3 || m2 < 2)
        throw GraphError("lemma41_family requires k >= 3, m1 >= 3, m2 >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.push_back({i, i % k + 1});
    std::vector<int> q1{1, 2};
    for (int i = 0; i < m1 - 2; ++i) q1.push_back(k + 1 + i);
    std::vector<int> q2{1};
    for (int i = 0; i < m2 - 1; ++i) q2.push_back(k + m1 - 1 + i);
    for (size_t i = 0; i < q1.size(); ++i)
        for (size_t j = i + 1; j < q1.size(); ++j) e.push_back({q1[i], q1[j]});
    for (size_t i = 0; i < q2.size(); ++i)
        for (size_t j = i + 1; j < q2.size(); ++j) e.push_back({q2[i], q2[j]});
    return make_graph(k + m1 + m2 - 3, std::move(e));
}

inline int lemma41_reg(int k, int m1, int m2) {
    if (k < 3 || m1 < 3 || m2 < 2)
        throw GraphError("lemma41_reg requires k >= 3, m1 >= 3, m2 >= 2");
    return m2 == 2 ? k - 1 : k;
}

// C_k with K_{m1} glued at vertex 1 and K_{m2} glued at the adjacent
// vertex 2. Cycle vertices 1..k; clique fill-ins ascending from k+1.
inline Graph lemma42_family(int k, int m1, int m2) {
    if (k < 4 || m1 < 2 || m2 < 2)
        throw GraphError("lemma42_family requires k >= 4, m1 >= 2, m2 >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.push_back({i, i % k + 1});
    std::vector<int> q1{1};
    for (int i = 0; i < m1 - 1; ++i) q1.push_back(k + 1 + i);
    std::vector<int> q2{2};
    for (int i = 0; i < m2 - 1; ++i) q2.push_back(k + m1 + i);
    for (size_t i = 0; i < q1.size(); ++i)
        for (size_t j = i + 1; j < q1.size(); ++j) e.push_back({q1[i], q1[j]});
    for (size_t i = 0; i < q2.size(); ++i)
        for (size_t j = i + 1; j < q2.size(); ++j) e.push_back({q2[i], q2[j]});
    return make_graph(k + m1 + m2 - 2, std::move(e));
}

inline int lemma42_reg(int k, int m1, int m2) {
    if (k < 4 || m1 < 2 || m2 < 2)
        throw GraphError("lemma42_reg requires k >= 4, m1 >= 2, m2 >= 2");
    return (m1 == 2 && m2 == 2) ? k - 1 : k;
}

// One link of a chain specification: a clique K_m or a cycle C_k, the
// latter optionally with the distance around the cycle from the entry
// vertex to the exit vertex (default 1, i.e. adjacent cut points).
struct ChainToken {
    bool is_cycle = false;
    int size = 0;
    int cut_distance = 1;
};

// Glue blocks in a row, each sharing one vertex with its predecessor.
// Labels are deterministic: the entry vertex of the first block is 1 and
// fresh vertices are allocated ascending; a cycle's fresh vertices follow
// its cyclic order starting after the entry vertex.
inline Graph build_chain(const std::vector<ChainToken>& tokens) {
    if (tokens.empty()) throw GraphError("build_chain: empty chain");
    std::vector<std::pair<int, int>> e;
    int next_fresh = 2;
    int entry = 1;
    for (const auto& tok : tokens) {
        if (tok.is_cycle) {
            if (tok.size < 3) throw GraphError("build_chain: cycle blocks need >= 3 vertices");
            if (tok.cut_distance < 1 || tok.cut_distance >= tok.size)
                throw GraphError("build_chain: cut distance must be in [1, k-1]");
            std::vector<int> order{entry};
            for (int i = 1; i < tok.size; ++i) order.push_back(next_fresh++);
            for (int i = 0; i < tok.size; ++i) e.push_back({order[i], order[(i + 1) % tok.size]});
            entry = order[tok.cut_distance];
        } else {
            if (tok.size < 2) throw GraphError("build_chain: clique blocks need >= 2 vertices");
            std::vector<int> verts{entry};
            for (int i = 1; i < tok.size; ++i) verts.push_back(next_fresh++);
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j) e.push_back({verts[i], verts[j]});
            entry = verts[1];
        }
    }
    return make_graph(next_fresh - 1, std::move(e));
}

// The two worked 11- and 9-vertex examples: chains K2-C4-C3-C4-K2 and
// K2-C4-C4-K2 with adjacent cut points on every C4.
inline std::pair<Graph, Graph> paper_example_graphs() {
    auto K = [](int m) { return ChainToken{false, m, 1}; };
    auto C = [](int k) { return ChainToken{true, k, 1}; };
    Graph g1 = build_chain({K(2), C(4), C(3), C(4), K(2)});
    Graph g2 = build_chain({K(2), C(4), C(4), K(2)});
    return {g1, g2};
}

}  // namespace cactusreg

#endif  // CACTUSREG_CM_CACTUS_HPP
