#ifndef CACTUSREG_IDEAL_HPP
#define CACTUSREG_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cactusreg/errors.hpp"
#include "cactusreg/graph.hpp"

namespace cactusreg {

// The ideal generated by x_i y_j - x_j y_i over the edges {i,j} of a
// graph, in the 2n variables x_1..x_n, y_1..y_n.
struct BinomialEdgeIdeal {
    int n = 0;
    std::vector<std::pair<int, int>> generators;  // (i, j) with i < j, one per edge
};

inline BinomialEdgeIdeal binomial_edge_ideal(const Graph& g) { return {g.n, g.edges}; }

// Squarefree monomial in the 2n variables x_1..x_n, y_1..y_n:
// bit v-1 is x_v, bit n+v-1 is y_v.
using VarMask = std::uint64_t;

inline VarMask xvar(int n, int v) { return VarMask{1} << (v - 1); }
inline VarMask yvar(int n, int v) { return VarMask{1} << (n + v - 1); }

inline std::string monomial_string(int n, VarMask m) {
    std::string s;
    for (int v = 1; v <= n; ++v)
        if (m & xvar(n, v)) s += "x" + std::to_string(v);
    for (int v = 1; v <= n; ++v)
        if (m & yvar(n, v)) s += "y" + std::to_string(v);
    return s.empty() ? "1" : s;
}

// Path i = u_0, u_1, ..., u_r = j with i < j, every interior vertex
// smaller than i or larger than j, and no proper subset of the interior
// vertices forming an i-j path. Stored by its endpoint pair and sorted
// interior vertex set (the induced binomial depends only on the set).
struct AdmissiblePath {
    int i = 0;
    int j = 0;
    std::vector<int> interior;

    bool operator==(const AdmissiblePath&) const = default;
};

// Monomial multiplier of the path binomial: x_t for interior t > j,
// y_t for interior t < i.
inline VarMask path_multiplier(int n, const AdmissiblePath& p) {
    VarMask m = 0;
    for (int t : p.interior) m |= t > p.j ? xvar(n, t) : yvar(n, t);
    return m;
}

// Leading monomial of the path binomial under lex with
// x_1 > ... > x_n > y_1 > ... > y_n.
inline VarMask admissible_path_monomial(int n, const AdmissiblePath& p) {
    return path_multiplier(n, p) | xvar(n, p.i) | yvar(n, p.j);
}

// Reduced Groebner basis element as a pure difference lead - tail.
struct GroebnerPair {
    VarMask lead = 0;
    VarMask tail = 0;
};

namespace detail {

// All i-j paths through allowed vertices, recorded as interior vertex
// bitmasks (bit v-1 for vertex v).
inline void interior_sets_rec(const Graph& g, int cur, int j, std::uint64_t allowed,
                              std::uint64_t used, std::vector<std::uint64_t>& out) {
    for (int u : g.neighbors(cur)) {
        if (u == j) out.push_back(used);
        std::uint64_t bit = std::uint64_t{1} << (u - 1);
        if ((allowed & bit) && !(used & bit))
            interior_sets_rec(g, u, j, allowed, used | bit, out);
    }
}

}  // namespace detail

// All admissible paths of g, sorted by (i, j, interior set).
inline std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
    if (g.n > 32) throw CapExceeded("admissible paths limited to 32 vertices");
    std::vector<AdmissiblePath> out;
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            std::uint64_t allowed = 0;
            for (int v = 1; v <= g.n; ++v)
                if (v < i || v > j) allowed |= std::uint64_t{1} << (v - 1);
            std::vector<std::uint64_t> sets;
            detail::interior_sets_rec(g, i, j, allowed, 0, sets);
            std::sort(sets.begin(), sets.end());
            sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
            // keep the set-minimal ones: those are exactly the admissible paths
            for (size_t a = 0; a < sets.size(); ++a) {
                bool minimal = true;
                for (size_t b = 0; b < sets.size() && minimal; ++b)
                    if (b != a && (sets[b] & sets[a]) == sets[b]) minimal = false;
                if (!minimal) continue;
                AdmissiblePath p{i, j, {}};
                for (int v = 1; v <= g.n; ++v)
                    if (sets[a] & (std::uint64_t{1} << (v - 1))) p.interior.push_back(v);
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

// Reduced Groebner basis of the edge-binomial ideal under the lex order
// above: one pure difference per admissible path.
inline std::vector<GroebnerPair> groebner_pairs(const Graph& g) {
    std::vector<GroebnerPair> out;
    for (const auto& p : admissible_paths(g)) {
        VarMask mult = path_multiplier(g.n, p);
        out.push_back({mult | xvar(g.n, p.i) | yvar(g.n, p.j),
                       mult | xvar(g.n, p.j) | yvar(g.n, p.i)});
    }
    return out;
}

struct SquarefreeMonomialIdeal {
    int nvars = 0;
    std::vector<VarMask> min_gens;  // sorted, mutually incomparable under divisibility
};

// Lex initial ideal of the edge-binomial ideal: generated by the leading
// monomials of the admissible-path binomials. Squarefree.
inline SquarefreeMonomialIdeal initial_ideal(const Graph& g) {
    SquarefreeMonomialIdeal ideal;
    ideal.nvars = 2 * g.n;
    for (const auto& p : admissible_paths(g)) ideal.min_gens.push_back(admissible_path_monomial(g.n, p));
    std::sort(ideal.min_gens.begin(), ideal.min_gens.end());
    ideal.min_gens.erase(std::unique(ideal.min_gens.begin(), ideal.min_gens.end()), ideal.min_gens.end());
    // drop multiples of other generators
    std::vector<VarMask> mins;
    for (size_t a = 0; a < ideal.min_gens.size(); ++a) {
        bool minimal = true;
        for (size_t b = 0; b < ideal.min_gens.size() && minimal; ++b)
            if (b != a && (ideal.min_gens[b] & ideal.min_gens[a]) == ideal.min_gens[b]) minimal = false;
        if (minimal) mins.push_back(ideal.min_gens[a]);
    }
    ideal.min_gens = std::move(mins);
    return ideal;
}

}  // namespace cactusreg

#endif  // CACTUSREG_IDEAL_HPP
