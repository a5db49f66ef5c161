#ifndef CACTUSREG_HOMOLOGY_HPP
#define CACTUSREG_HOMOLOGY_HPP

#include <algorithm>
#include <bit>
#include <vector>

#include "cactusreg/complex.hpp"
#include "cactusreg/linalg.hpp"

namespace cactusreg {

namespace detail {

// Boundary map from size-s faces to size-(s-1) faces, s >= 1. Faces must
// be sorted by mask. Entry signs alternate over the face's vertices in
// increasing order; columns carry rows in ascending order (dropping the
// largest vertex leaves the smallest mask).
inline std::vector<IntColumn> boundary_matrix(const std::vector<std::uint64_t>& from_faces,
                                              const std::vector<std::uint64_t>& to_faces) {
    std::vector<IntColumn> cols;
    cols.reserve(from_faces.size());
    for (auto f : from_faces) {
        IntColumn col;
        int s = std::popcount(f);
        // vertices of f in descending order: masks ascend, rows ascend
        int pos = s - 1;
        std::uint64_t rest = f;
        while (rest) {
            int v = 63 - std::countl_zero(rest);
            rest &= ~(std::uint64_t{1} << v);
            std::uint64_t sub = f & ~(std::uint64_t{1} << v);
            auto it = std::lower_bound(to_faces.begin(), to_faces.end(), sub);
            col.push_back({static_cast<int>(it - to_faces.begin()), (pos % 2 == 0) ? 1 : -1});
            --pos;
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace detail

// Ranks of reduced homology of the subcomplex induced on W, indexed so
// that result[t] is the rank of H~ in degree t-1 (degree -1 first). The
// void complex returns an empty list; the complex {EMPTYSET} returns
// {1} (rank one in degree -1).
inline std::vector<long> reduced_homology_ranks(const SimplicialComplex& c, std::uint64_t w,
                                                const FieldSpec& field) {
    auto faces = faces_by_size(induced_subcomplex(c, w));
    if (faces.empty()) return {};
    int top_size = static_cast<int>(faces.size()) - 1;
    std::vector<long> boundary_rank(top_size + 2, 0);  // boundary_rank[s] = rank of d_s
    for (int s = 1; s <= top_size; ++s)
        boundary_rank[s] = matrix_rank(detail::boundary_matrix(faces[s], faces[s - 1]), field);
    std::vector<long> out(top_size + 1, 0);
    for (int s = 0; s <= top_size; ++s)
        out[s] = static_cast<long>(faces[s].size()) - boundary_rank[s] - boundary_rank[s + 1];
    return out;
}

// Largest degree d with floor_d <= d and nonzero H~_d, scanning top-down
// over the precomputed face levels and reusing each boundary rank for
// the next level. Returns kNoHomology when every such degree vanishes.
inline constexpr int kNoHomology = -1000000;

inline int top_homology_degree_at_least(const std::vector<std::vector<std::uint64_t>>& faces,
                                        const FieldSpec& field, int floor_d) {
    if (faces.empty()) return kNoHomology;
    int top_size = static_cast<int>(faces.size()) - 1;
    long rank_above = 0;  // rank of d_{d+2}
    for (int d = top_size - 1; d >= floor_d && d >= -1; --d) {
        long rank_here =
            d + 1 >= 1 ? matrix_rank(detail::boundary_matrix(faces[d + 1], faces[d]), field) : 0;
        long betti = static_cast<long>(faces[d + 1].size()) - rank_here - rank_above;
        if (betti > 0) return d;
        rank_above = rank_here;
    }
    return kNoHomology;
}

}  // namespace cactusreg

#endif  // CACTUSREG_HOMOLOGY_HPP
