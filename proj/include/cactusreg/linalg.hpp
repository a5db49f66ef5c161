#ifndef CACTUSREG_LINALG_HPP
#define CACTUSREG_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cactusreg/errors.hpp"

namespace cactusreg {

// Coefficient field for rank computations: a prime p, or the rationals
// when prime == 0.
struct FieldSpec {
    unsigned prime = 32003;

    bool is_rational() const { return prime == 0; }

    std::string describe() const { return prime == 0 ? "Q" : "GF(" + std::to_string(prime) + ")"; }
};

inline FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q" || s == "0") return {0};
    try {
        long v = std::stol(s);
        if (v == 2 || v == 32003) return {static_cast<unsigned>(v)};
    } catch (...) {
    }
    throw ParseError("field must be one of 2, 32003, Q");
}

// Sparse column with entries +1/-1, rows ascending.
using IntColumn = std::vector<std::pair<int, int>>;

namespace detail {

struct GFpOps {
    std::uint64_t p;
    using Elt = std::uint64_t;

    Elt from_int(int v) const { return v >= 0 ? static_cast<Elt>(v) % p : p - (static_cast<Elt>(-v) % p); }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt mul(Elt a, Elt b) const { return a * b % p; }
    Elt sub_mul(Elt a, Elt f, Elt b) const { return (a + (p - f) * b) % p; }  // a - f*b
    Elt inv(Elt a) const {
        // Fermat: p prime
        Elt r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elt a) const { return a == 0; }
};

struct RationalOps {
    using Elt = boost::multiprecision::cpp_rational;

    Elt from_int(int v) const { return Elt(v); }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt sub_mul(const Elt& a, const Elt& f, const Elt& b) const { return a - f * b; }
    Elt inv(const Elt& a) const { return 1 / a; }
    bool is_zero(const Elt& a) const { return a == 0; }
};

// Column reduction: repeatedly cancel the lowest (largest-row) entry of
// the working column against the stored column with the same low row;
// a column that survives nonempty contributes one to the rank and is
// stored as the pivot for its low row.
template <class Ops>
long rank_by_column_reduction(const std::vector<IntColumn>& cols, const Ops& ops) {
    using Elt = typename Ops::Elt;
    using Column = std::vector<std::pair<int, Elt>>;  // rows ascending
    std::unordered_map<int, int> pivot_of_row;
    std::vector<Column> stored;
    long rank = 0;
    for (const auto& c0 : cols) {
        Column cur;
        cur.reserve(c0.size());
        for (auto [r, v] : c0) {
            Elt e = ops.from_int(v);
            if (!ops.is_zero(e)) cur.push_back({r, e});
        }
        while (!cur.empty()) {
            int low = cur.back().first;
            auto it = pivot_of_row.find(low);
            if (it == pivot_of_row.end()) {
                pivot_of_row.emplace(low, static_cast<int>(stored.size()));
                stored.push_back(std::move(cur));
                ++rank;
                break;
            }
            const Column& other = stored[it->second];
            Elt factor = ops.mul(cur.back().second, ops.inv(other.back().second));
            Column next;
            next.reserve(cur.size() + other.size());
            size_t a = 0, b = 0;
            while (a < cur.size() || b < other.size()) {
                if (b == other.size() || (a < cur.size() && cur[a].first < other[b].first)) {
                    next.push_back(cur[a++]);
                } else if (a == cur.size() || other[b].first < cur[a].first) {
                    Elt v = ops.mul(ops.neg(factor), other[b].second);
                    if (!ops.is_zero(v)) next.push_back({other[b].first, std::move(v)});
                    ++b;
                } else {
                    Elt v = ops.sub_mul(cur[a].second, factor, other[b].second);
                    if (!ops.is_zero(v)) next.push_back({cur[a].first, std::move(v)});
                    ++a;
                    ++b;
                }
            }
            cur = std::move(next);
        }
    }
    return rank;
}

}  // namespace detail

// Rank of a sparse matrix with entries +1/-1 over the chosen field.
inline long matrix_rank(const std::vector<IntColumn>& cols, const FieldSpec& field) {
    if (field.is_rational()) return detail::rank_by_column_reduction(cols, detail::RationalOps{});
    return detail::rank_by_column_reduction(cols, detail::GFpOps{field.prime});
}

}  // namespace cactusreg

#endif  // CACTUSREG_LINALG_HPP
