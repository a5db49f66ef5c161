#ifndef CACTUSREG_KOSZUL_HPP
#define CACTUSREG_KOSZUL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cactusreg/ideal.hpp"
#include "cactusreg/linalg.hpp"

namespace cactusreg {

inline constexpr int kKoszulCap = 4;

// Graded Betti numbers beta_{i,j}; only nonzero entries stored.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;

    int reg() const {
        int r = 0;
        for (const auto& [ij, v] : entries)
            if (v > 0) r = std::max(r, ij.second - ij.first);
        return r;
    }
    int pd() const {
        int p = 0;
        for (const auto& [ij, v] : entries)
            if (v > 0) p = std::max(p, ij.first);
        return p;
    }
};

namespace detail {

// Monomial in at most 8 variables, one exponent byte per variable.
using ExpMon = std::array<std::uint8_t, 8>;

inline bool divisible_by(const ExpMon& m, VarMask lead) {
    while (lead) {
        int v = std::countr_zero(lead);
        lead &= lead - 1;
        if (m[v] == 0) return false;
    }
    return true;
}

inline void apply_rewrite(ExpMon& m, VarMask lead, VarMask tail) {
    for (VarMask b = lead; b;) {
        int v = std::countr_zero(b);
        b &= b - 1;
        --m[v];
    }
    for (VarMask b = tail; b;) {
        int v = std::countr_zero(b);
        b &= b - 1;
        ++m[v];
    }
}

// Normal form modulo the pure-difference Groebner basis: rewriting a
// monomial by lead -> tail always yields a single monomial with
// coefficient one, and lex termination makes the result the unique
// normal form.
inline ExpMon normal_form(ExpMon m, const std::vector<GroebnerPair>& gb) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : gb)
            if (divisible_by(m, p.lead)) {
                apply_rewrite(m, p.lead, p.tail);
                changed = true;
                break;
            }
    }
    return m;
}

inline std::uint64_t pack(const ExpMon& m) {
    std::uint64_t k = 0;
    for (int v = 7; v >= 0; --v) k = (k << 8) | m[v];
    return k;
}

}  // namespace detail

// Full graded Betti table of S/J_G from vertex-multigraded strands of
// the Koszul complex on the 2n variables: for each multidegree a in
// {0,1,2}^n, the strand basis in homological degree i consists of pairs
// (T, m) with T an i-subset of the variables and m a standard monomial,
// their vertex degrees summing to a; the differential sends e_T (x) m to
// the signed sum of e_{T-t} (x) NF(x_t m). Multidegrees outside
// {0,1,2}^n carry no Betti numbers: upper-semicontinuity bounds
// beta_{i,a}(S/J) by beta_{i,a}(S/in J), and the initial ideal is
// squarefree, so its Hochster decomposition lives in squarefree
// multidegrees.
inline BettiTable koszul_betti(const Graph& g, const FieldSpec& field = {}) {
    if (g.n > kKoszulCap)
        throw CapExceeded("Betti-table oracle handles at most " + std::to_string(kKoszulCap) +
                          " vertices");
    const int n = g.n, nv = 2 * g.n;
    auto gb = groebner_pairs(g);

    // vertex degree of each variable
    auto var_vertex = [&](int v) { return v < n ? v : v - n; };

    // standard monomials of vertex multidegree d, as exponent arrays
    auto standard_monomials = [&](const std::array<int, 4>& d) {
        std::vector<detail::ExpMon> out;
        detail::ExpMon m{};
        auto rec = [&](auto&& self, int vertex) -> void {
            if (vertex == n) {
                for (const auto& p : gb)
                    if (detail::divisible_by(m, p.lead)) return;
                out.push_back(m);
                return;
            }
            for (int ex = 0; ex <= d[vertex]; ++ex) {
                m[vertex] = static_cast<std::uint8_t>(ex);
                m[n + vertex] = static_cast<std::uint8_t>(d[vertex] - ex);
                self(self, vertex + 1);
            }
            m[vertex] = m[n + vertex] = 0;
        };
        rec(rec, 0);
        return out;
    };

    BettiTable table;
    std::array<int, 4> a{};
    auto run_multidegree = [&](const std::array<int, 4>& deg) {
        int total = 0;
        for (int i = 0; i < n; ++i) total += deg[i];
        // strand bases per homological degree: (T, packed standard monomial)
        std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> basis(nv + 1);
        std::vector<std::map<std::pair<std::uint32_t, std::uint64_t>, int>> index(nv + 1);
        for (std::uint32_t t = 0; t < (1u << nv); ++t) {
            std::array<int, 4> rest = deg;
            bool ok = true;
            for (std::uint32_t b = t; b;) {
                int v = std::countr_zero(b);
                b &= b - 1;
                if (--rest[var_vertex(v)] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int i = std::popcount(t);
            for (const auto& m : standard_monomials(rest)) {
                auto key = std::make_pair(t, detail::pack(m));
                index[i].emplace(key, static_cast<int>(basis[i].size()));
                basis[i].push_back(key);
            }
        }
        std::vector<long> rank(nv + 2, 0);
        for (int i = 1; i <= nv; ++i) {
            if (basis[i].empty() || basis[i - 1].empty()) continue;
            std::vector<IntColumn> cols;
            cols.reserve(basis[i].size());
            for (const auto& [t, packed] : basis[i]) {
                detail::ExpMon m{};
                for (int v = 0; v < 8; ++v) m[v] = static_cast<std::uint8_t>((packed >> (8 * v)) & 0xff);
                IntColumn col;
                for (std::uint32_t b = t; b;) {
                    int v = std::countr_zero(b);
                    b &= b - 1;
                    int sign = std::popcount(t & ((1u << v) - 1)) % 2 == 0 ? 1 : -1;
                    detail::ExpMon prod = m;
                    ++prod[v];
                    auto nf = detail::normal_form(prod, gb);
                    auto it = index[i - 1].find({t & ~(1u << v), detail::pack(nf)});
                    if (it == index[i - 1].end())
                        throw GraphError("koszul strand basis mismatch");
                    col.push_back({it->second, sign});
                }
                std::sort(col.begin(), col.end());
                cols.push_back(std::move(col));
            }
            rank[i] = matrix_rank(cols, field);
        }
        for (int i = 0; i <= nv; ++i) {
            long betti = static_cast<long>(basis[i].size()) - rank[i] - rank[i + 1];
            if (betti > 0) table.entries[{i, total}] += betti;
        }
    };
    auto sweep = [&](auto&& self, int vertex) -> void {
        if (vertex == n) {
            run_multidegree(a);
            return;
        }
        for (int d = 0; d <= 2; ++d) {
            a[vertex] = d;
            self(self, vertex + 1);
        }
        a[vertex] = 0;
    };
    sweep(sweep, 0);
    return table;
}

}  // namespace cactusreg

#endif  // CACTUSREG_KOSZUL_HPP
