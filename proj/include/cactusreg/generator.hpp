#ifndef CACTUSREG_GENERATOR_HPP
#define CACTUSREG_GENERATOR_HPP

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "cactusreg/cm_cactus.hpp"
#include "cactusreg/graph.hpp"

namespace cactusreg {

// Random block-sum generation: start from one block, then repeatedly
// glue a fresh block at a uniformly chosen existing vertex. Every draw
// uses mt19937_64 plus modulo so streams are identical across platforms
// for a fixed seed.
struct GenConfig {
    int min_blocks = 1;
    int max_blocks = 3;
    int max_vertices = 8;
    std::vector<ChainToken> palette;
};

inline std::vector<ChainToken> default_cycle_clique_palette() {
    return {{false, 2, 1}, {false, 3, 1}, {false, 4, 1}, {true, 4, 1}, {true, 5, 1}, {true, 6, 1}};
}

inline std::vector<ChainToken> default_cactus_palette() {
    return {{false, 2, 1}, {false, 3, 1}, {true, 4, 1}, {true, 5, 1}, {true, 6, 1}};
}

inline Graph block_from_token(const ChainToken& tok) {
    if (tok.is_cycle) {
        if (tok.size < 3) throw GraphError("cycle blocks need >= 3 vertices");
        return cycle(tok.size);
    }
    if (tok.size < 2) throw GraphError("clique blocks need >= 2 vertices");
    return tok.size == 2 ? path(2) : complete_graph(tok.size);
}

inline Graph random_block_sum_graph(const GenConfig& cfg, std::mt19937_64& rng) {
    if (cfg.palette.empty()) throw GraphError("generator palette is empty");
    if (cfg.min_blocks < 1 || cfg.max_blocks < cfg.min_blocks)
        throw GraphError("invalid block count range");
    int target = cfg.min_blocks +
                 static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_blocks - cfg.min_blocks + 1));
    Graph g;
    for (int b = 0; b < target; ++b) {
        std::vector<ChainToken> fits;
        for (const auto& tok : cfg.palette) {
            int added = b == 0 ? tok.size : tok.size - 1;
            if ((b == 0 ? 0 : g.n) + added <= cfg.max_vertices) fits.push_back(tok);
        }
        if (fits.empty()) {
            if (b == 0) throw GraphError("no palette block fits the vertex budget");
            break;
        }
        const auto& tok = fits[rng() % fits.size()];
        Graph block = block_from_token(tok);
        if (b == 0) {
            g = std::move(block);
        } else {
            int at = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
            g = clique_sum(g, block, {at}, {1}).graph;
        }
    }
    return g;
}

// All chains of palette blocks with the given length range that fit the
// vertex budget, deduplicated up to reversal. Cut-point distances on
// cycle blocks come from the placement mode: adjacent cut points only
// (distance 1), or every distance up to k/2 (beyond that the cycle's
// mirror symmetry repeats the graph). Distances on end blocks do not
// affect the graph and are normalized to 1.
enum class ChainPlacements { Adjacent, All };

inline std::vector<std::vector<ChainToken>> chain_enumeration(int min_len, int max_len,
                                                              int max_vertices,
                                                              const std::vector<ChainToken>& palette,
                                                              ChainPlacements placements) {
    if (palette.empty()) throw GraphError("chain enumeration palette is empty");
    if (min_len < 1 || max_len < min_len) throw GraphError("invalid chain length range");
    auto key = [](const ChainToken& t) { return std::tuple(t.is_cycle, t.size, t.cut_distance); };
    std::vector<std::vector<ChainToken>> out;
    std::vector<ChainToken> cur;
    auto vertex_count = [](const std::vector<ChainToken>& seq) {
        int n = 0;
        for (const auto& t : seq) n += t.size;
        return n - static_cast<int>(seq.size()) + 1;
    };
    auto canonical = [&](std::vector<ChainToken> seq) {
        seq.front().cut_distance = 1;
        seq.back().cut_distance = 1;
        auto rev = seq;
        std::reverse(rev.begin(), rev.end());
        auto less = [&](const std::vector<ChainToken>& a, const std::vector<ChainToken>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                [&](const ChainToken& x, const ChainToken& y) {
                                                    return key(x) < key(y);
                                                });
        };
        return less(rev, seq) ? rev : seq;
    };
    auto emit = [&]() {
        if (static_cast<int>(cur.size()) < min_len) return;
        auto canon = canonical(cur);
        auto eq = [&](const std::vector<ChainToken>& a, const std::vector<ChainToken>& b) {
            if (a.size() != b.size()) return false;
            for (size_t i = 0; i < a.size(); ++i)
                if (key(a[i]) != key(b[i])) return false;
            return true;
        };
        for (const auto& prev : out)
            if (eq(prev, canon)) return;
        out.push_back(std::move(canon));
    };
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) emit();
        if (static_cast<int>(cur.size()) == max_len) return;
        for (const auto& tok : palette) {
            std::vector<int> distances{1};
            if (tok.is_cycle && placements == ChainPlacements::All)
                for (int d = 2; d <= tok.size / 2; ++d) distances.push_back(d);
            for (int d : distances) {
                ChainToken t = tok;
                t.cut_distance = d;
                cur.push_back(t);
                if (vertex_count(cur) <= max_vertices) self(self);
                cur.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_GENERATOR_HPP
