#ifndef CACTUSREG_HOCHSTER_HPP
#define CACTUSREG_HOCHSTER_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cactusreg/complex.hpp"
#include "cactusreg/homology.hpp"
#include "cactusreg/ideal.hpp"

namespace cactusreg {

inline constexpr int kHochsterHardCap = 11;

struct HochsterConfig {
    FieldSpec field{};
    int vertex_cap = 9;
    int workers = 0;  // 0: one per hardware thread, at most 16
};

struct HochsterStats {
    std::uint64_t candidate_subsets = 0;
    std::uint64_t homology_runs = 0;
    std::uint64_t size_groups_skipped = 0;
};

namespace detail {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw ? hw : 1, 16));
}

inline void atomic_max(std::atomic<int>& target, int value) {
    int cur = target.load();
    while (cur < value && !target.compare_exchange_weak(cur, value)) {
    }
}

}  // namespace detail

// reg(S/J_G) by Hochster's formula on the Stanley-Reisner complex of the
// squarefree lex initial ideal: the maximum over variable subsets W of
// 1 + the top degree with nonzero reduced homology of the induced
// subcomplex. Only subsets that are unions of generators matter: any
// other W has a vertex lying in no generator inside W, which makes the
// induced subcomplex a cone. Subsets are processed largest first with a
// global cutoff (a subset of size s contributes at most s-1) and a
// per-subset floor (degrees that cannot beat the running best are not
// computed); neither skip can change the maximum, so the result is
// deterministic regardless of worker count.
inline int regularity_hochster(const Graph& g, const HochsterConfig& cfg = {},
                               HochsterStats* stats = nullptr) {
    int cap = std::min(cfg.vertex_cap, kHochsterHardCap);
    if (g.n > cap)
        throw CapExceeded("graph has " + std::to_string(g.n) + " vertices; oracle cap is " +
                          std::to_string(cap) + (cfg.vertex_cap > kHochsterHardCap
                                                     ? " (hard ceiling " + std::to_string(kHochsterHardCap) + ")"
                                                     : ""));
    if (g.edge_count() == 0) return 0;

    auto ideal = initial_ideal(g);
    auto cx = stanley_reisner(ideal);

    // all unions of generators, i.e. all non-cone subsets
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0}, candidates;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto w : frontier)
            for (auto m : ideal.min_gens) {
                auto u = w | m;
                if (seen.insert(u).second) {
                    next.push_back(u);
                    candidates.push_back(u);
                }
            }
        frontier = std::move(next);
    }
    if (stats) stats->candidate_subsets = candidates.size();

    std::sort(candidates.begin(), candidates.end(), [](std::uint64_t a, std::uint64_t b) {
        int sa = std::popcount(a), sb = std::popcount(b);
        return sa != sb ? sa > sb : a < b;
    });

    std::atomic<int> best{0};
    std::atomic<std::uint64_t> runs{0};
    int nworkers = detail::resolve_workers(cfg.workers);

    size_t group_start = 0;
    while (group_start < candidates.size()) {
        int s = std::popcount(candidates[group_start]);
        size_t group_end = group_start;
        while (group_end < candidates.size() && std::popcount(candidates[group_end]) == s) ++group_end;
        if (best.load() >= s - 1) {
            if (stats) stats->size_groups_skipped += 1;
            break;  // no remaining subset can improve the maximum
        }
        auto work = [&](size_t offset) {
            for (size_t i = group_start + offset; i < group_end; i += nworkers) {
                std::uint64_t w = candidates[i];
                int floor_d = best.load();
                if (s - 2 < floor_d) continue;
                auto faces = faces_by_size(induced_subcomplex(cx, w));
                runs.fetch_add(1, std::memory_order_relaxed);
                int d = top_homology_degree_at_least(faces, cfg.field, floor_d);
                if (d >= 0) detail::atomic_max(best, d + 1);
            }
        };
        if (nworkers == 1 || group_end - group_start < 2) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            std::exception_ptr err;
            for (int t = 0; t < nworkers; ++t)
                threads.emplace_back([&, t] {
                    try {
                        work(static_cast<size_t>(t));
                    } catch (...) {
                        err = std::current_exception();
                    }
                });
            for (auto& th : threads) th.join();
            if (err) std::rethrow_exception(err);
        }
        group_start = group_end;
    }
    if (stats) stats->homology_runs = runs.load();
    return best.load();
}

}  // namespace cactusreg

#endif  // CACTUSREG_HOCHSTER_HPP
