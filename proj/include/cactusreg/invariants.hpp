#ifndef CACTUSREG_INVARIANTS_HPP
#define CACTUSREG_INVARIANTS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cactusreg/block_cut.hpp"
#include "cactusreg/cliques.hpp"
#include "cactusreg/decompose.hpp"
#include "cactusreg/graph.hpp"

namespace cactusreg {

// Every block is an edge or a clique.
inline bool is_block_graph(const Graph& g) {
    auto t = block_cut_tree(g);
    for (const auto& b : t.blocks) {
        auto k = classify_block_unchecked(g, b);
        if (k.tag != BlockTag::Edge && k.tag != BlockTag::Clique) return false;
    }
    return true;
}

// Connected, and every block is an edge or a cycle (triangles classify as
// Clique(3) and count as cycles here).
inline bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    auto t = block_cut_tree(g);
    for (const auto& b : t.blocks) {
        auto k = classify_block_unchecked(g, b);
        bool ok = k.tag == BlockTag::Edge || k.is_clique(3) || k.tag == BlockTag::Cycle;
        if (!ok) return false;
    }
    return true;
}

// Every block is an edge, a clique, or an induced cycle. Connectivity is
// not required; the bound below is additive over components.
inline bool is_cycle_clique(const Graph& g) {
    auto t = block_cut_tree(g);
    for (const auto& b : t.blocks) {
        auto k = classify_block_unchecked(g, b);
        if (k.tag == BlockTag::Other) return false;
    }
    return true;
}

// Block graph B(G): one vertex per block of g (in canonical block order),
// edges between blocks sharing a cut vertex.
inline Graph block_graph_of(const Graph& g) {
    if (!is_connected(g)) throw GraphError("block_graph_of: graph must be connected");
    auto t = block_cut_tree(g);
    int b = static_cast<int>(t.blocks.size());
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= g.n; ++v) {
        const auto& ids = t.vertex_blocks[v];
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) e.push_back({ids[i] + 1, ids[j] + 1});
    }
    Graph bg = make_graph(b, std::move(e));
    if (!is_block_graph(bg)) throw GraphError("block_graph_of: result is not a block graph");
    return bg;
}

// Counting profile of a graph whose blocks are edges, cliques and cycles:
//   c           number of maximal cliques
//   c_prime     maximal cliques that are not edges of a cycle block of
//               length >= 4
//   cycle_counts[k]  number of cycle blocks of length k (k >= 4)
//   big_c       total number of such cycle blocks
//   paper_bound c_prime + sum over k of (k-2) * cycle_counts[k], an upper
//               bound for reg(S/J_G)
//   smk_bound   c, the conjectured clique-count bound
struct InvariantReport {
    int n = 0;
    int block_count = 0;
    int c = 0;
    int c_prime = 0;
    std::map<int, int> cycle_counts;
    int big_c = 0;
    int paper_bound = 0;
    int smk_bound = 0;
    bool is_block_graph = false;
    bool is_cactus = false;
    bool is_cycle_clique = false;
    bool is_indecomposable = false;
};

inline InvariantReport invariant_report(const Graph& g) {
    auto t = block_cut_tree(g);
    auto kinds = classify_blocks(g, t);
    for (size_t i = 0; i < kinds.size(); ++i) {
        if (kinds[i].tag == BlockTag::Other) {
            std::string verts;
            for (int v : t.blocks[i]) verts += (verts.empty() ? "" : ",") + std::to_string(v);
            throw BlockKindUnsupported("block {" + verts + "} is neither an edge, a clique, nor an induced cycle");
        }
    }
    InvariantReport r;
    r.n = g.n;
    r.block_count = static_cast<int>(t.blocks.size());
    auto cliques = maximal_cliques(g);
    r.c = static_cast<int>(cliques.size());

    // Edges of big cycle blocks are exactly the 2-element maximal cliques
    // whose endpoints lie in a common cycle block.
    std::vector<int> big_cycle_ids;
    for (size_t i = 0; i < kinds.size(); ++i)
        if (kinds[i].tag == BlockTag::Cycle) {
            big_cycle_ids.push_back(static_cast<int>(i));
            r.cycle_counts[kinds[i].size] += 1;
            r.big_c += 1;
        }
    r.c_prime = 0;
    for (const auto& q : cliques) {
        bool cycle_edge = false;
        if (q.size() == 2) {
            for (int id : big_cycle_ids) {
                const auto& bv = t.blocks[id];
                if (std::binary_search(bv.begin(), bv.end(), q[0]) &&
                    std::binary_search(bv.begin(), bv.end(), q[1])) {
                    cycle_edge = true;
                    break;
                }
            }
        }
        if (!cycle_edge) r.c_prime += 1;
    }
    r.paper_bound = r.c_prime;
    for (auto [k, cnt] : r.cycle_counts) r.paper_bound += (k - 2) * cnt;
    r.smk_bound = r.c;
    r.is_block_graph = cactusreg::is_block_graph(g);
    r.is_cactus = cactusreg::is_cactus(g);
    r.is_cycle_clique = true;  // no Other blocks at this point
    r.is_indecomposable = cactusreg::is_indecomposable(g);
    return r;
}

struct PeripheralCycle {
    std::vector<int> cycle;  // cycle block in cyclic order
    std::vector<int> run;    // r-2 consecutive cycle vertices, each in no other big cycle
};

namespace detail {

// Cyclic order of an induced cycle block, starting at its smallest label
// and moving toward that vertex's smaller neighbor within the block.
inline std::vector<int> cycle_order(const Graph& g, const std::vector<int>& block) {
    int start = *std::min_element(block.begin(), block.end());
    std::vector<int> nb;
    for (int u : block)
        if (u != start && g.has_edge(start, u)) nb.push_back(u);
    std::sort(nb.begin(), nb.end());
    std::vector<int> order{start, nb.front()};
    while (order.size() < block.size()) {
        int cur = order.back(), prev = order[order.size() - 2];
        int next = -1;
        for (int u : block)
            if (u != prev && u != cur && g.has_edge(cur, u)) {
                next = u;
                break;
            }
        order.push_back(next);
    }
    return order;
}

inline int min_label(const std::vector<int>& vs, const std::vector<int>& to_orig) {
    int m = to_orig[vs.front()];
    for (int v : vs) m = std::min(m, to_orig[v]);
    return m;
}

// Recursion of the leaf-peeling search. h uses its own labels; to_orig
// maps them back to the caller's graph.
inline PeripheralCycle peripheral_rec(const Graph& h, const std::vector<int>& to_orig) {
    auto t = block_cut_tree(h);
    auto kinds = classify_blocks(h, t);

    auto emit = [&](int id, int avoid) {
        // avoid < 0: any r-2 consecutive vertices do; otherwise the run
        // starts right after `avoid` in cyclic order.
        auto order = cycle_order(h, t.blocks[id]);
        int r = static_cast<int>(order.size());
        int startpos = 0;
        if (avoid >= 0) {
            for (int i = 0; i < r; ++i)
                if (order[i] == avoid) startpos = i + 1;
        }
        PeripheralCycle out;
        for (int v : order) out.cycle.push_back(to_orig[v]);
        for (int i = 0; i < r - 2; ++i) out.run.push_back(to_orig[order[(startpos + i) % r]]);
        return out;
    };

    if (t.blocks.size() == 1) {
        if (kinds[0].tag != BlockTag::Cycle) throw NoBigCycle("no cycle block of length >= 4");
        return emit(0, -1);
    }

    // Blocks of the block graph B(h) are sets of h-blocks sharing one
    // vertex. In a leaf of B(h)'s own block decomposition, every member
    // except the one connecting onward has all of its non-shared vertices
    // private to it.
    Graph bg = block_graph_of(h);
    auto t2 = block_cut_tree(bg);

    auto bg_block_key = [&](const std::vector<int>& bg_block) {
        int m = -1;
        for (int bv : bg_block) {
            int k = min_label(t.blocks[bv - 1], to_orig);
            if (m < 0 || k < m) m = k;
        }
        return m;
    };

    std::vector<int> members;  // h-block ids, 0-based
    int connector = -1;
    if (t2.blocks.size() <= 1) {
        for (size_t i = 0; i < t.blocks.size(); ++i) members.push_back(static_cast<int>(i));
    } else {
        int best_leaf = -1, best_key = 0;
        for (size_t i = 0; i < t2.blocks.size(); ++i) {
            int cuts = 0;
            for (int bv : t2.blocks[i])
                if (t2.is_cut_vertex(bv)) ++cuts;
            if (cuts > 1) continue;
            int key = bg_block_key(t2.blocks[i]);
            if (best_leaf < 0 || key < best_key) {
                best_leaf = static_cast<int>(i);
                best_key = key;
            }
        }
        for (int bv : t2.blocks[best_leaf]) {
            if (t2.is_cut_vertex(bv)) connector = bv - 1;
            members.push_back(bv - 1);
        }
    }

    // Shared vertex of the member blocks.
    std::vector<int> common = t.blocks[members[0]];
    for (size_t i = 1; i < members.size(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), t.blocks[members[i]].begin(),
                              t.blocks[members[i]].end(), std::back_inserter(next));
        common = std::move(next);
    }
    if (common.size() != 1) throw GraphError("peripheral cycle: malformed block-graph leaf");
    int v = common[0];

    int pick = -1, pick_key = 0;
    for (int id : members) {
        if (id == connector || kinds[id].tag != BlockTag::Cycle) continue;
        int key = min_label(t.blocks[id], to_orig);
        if (pick < 0 || key < pick_key) pick = id, pick_key = key;
    }
    if (pick >= 0) return emit(pick, v);

    // All peelable members are cliques: drop the one with the smallest
    // label and recurse (the cycle count is unchanged).
    int drop = -1, drop_key = 0;
    for (int id : members) {
        if (id == connector) continue;
        int key = min_label(t.blocks[id], to_orig);
        if (drop < 0 || key < drop_key) drop = id, drop_key = key;
    }
    std::vector<int> keep;
    for (int u = 1; u <= h.n; ++u) {
        bool in_drop = std::binary_search(t.blocks[drop].begin(), t.blocks[drop].end(), u);
        if (!in_drop || u == v) keep.push_back(u);
    }
    auto sub = induced_subgraph(h, keep);
    std::vector<int> next_orig(sub.graph.n + 1, 0);
    for (int u = 1; u <= sub.graph.n; ++u) next_orig[u] = to_orig[sub.to_original[u]];
    return peripheral_rec(sub.graph, next_orig);
}

}  // namespace detail

// A cycle block of length r >= 4 together with r-2 consecutive vertices
// of it that belong to no other cycle block of length >= 4. Such a pair
// always exists in a graph of edge/clique/cycle blocks with at least one
// big cycle; the search peels leaf cliques off the block structure until
// a big cycle sits at the outside.
inline PeripheralCycle find_peripheral_cycle(const Graph& g) {
    if (!is_cycle_clique(g)) throw GraphError("find_peripheral_cycle: blocks must be edges, cliques and cycles");
    auto comps = components(g);
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        auto t = block_cut_tree(sub.graph);
        auto kinds = classify_blocks(sub.graph, t);
        bool has_big = std::any_of(kinds.begin(), kinds.end(),
                                   [](const BlockKind& k) { return k.tag == BlockTag::Cycle; });
        if (!has_big) continue;
        return detail::peripheral_rec(sub.graph, sub.to_original);
    }
    throw NoBigCycle("no cycle block of length >= 4");
}

// Post-hoc check of the contract above, usable on any candidate answer.
inline bool verify_peripheral_cycle(const Graph& g, const PeripheralCycle& pc) {
    int r = static_cast<int>(pc.cycle.size());
    if (r < 4 || static_cast<int>(pc.run.size()) != r - 2) return false;
    std::vector<int> sorted_cycle = pc.cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    auto t = block_cut_tree(g);
    auto kinds = classify_blocks(g, t);
    int cycle_id = -1;
    for (size_t i = 0; i < t.blocks.size(); ++i)
        if (t.blocks[i] == sorted_cycle && kinds[i].tag == BlockTag::Cycle)
            cycle_id = static_cast<int>(i);
    if (cycle_id < 0) return false;
    // cyclic order given must actually walk the cycle
    for (int i = 0; i < r; ++i)
        if (!g.has_edge(pc.cycle[i], pc.cycle[(i + 1) % r])) return false;
    // run must be consecutive in the given order
    auto pos = std::find(pc.cycle.begin(), pc.cycle.end(), pc.run[0]);
    if (pos == pc.cycle.end()) return false;
    int p = static_cast<int>(pos - pc.cycle.begin());
    bool fwd = true, bwd = true;
    for (int i = 0; i < static_cast<int>(pc.run.size()); ++i) {
        if (pc.cycle[(p + i) % r] != pc.run[i]) fwd = false;
        if (pc.cycle[(p - i + 2 * r) % r] != pc.run[i]) bwd = false;
    }
    if (!fwd && !bwd) return false;
    for (int v : pc.run)
        for (int id : t.vertex_blocks[v])
            if (id != cycle_id && kinds[id].tag == BlockTag::Cycle) return false;
    return true;
}

}  // namespace cactusreg

#endif  // CACTUSREG_INVARIANTS_HPP
