#ifndef CACTUSREG_COMPLEX_HPP
#define CACTUSREG_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <vector>

#include "cactusreg/ideal.hpp"

namespace cactusreg {

// Simplicial complex on vertices 0..nverts-1 given by its minimal
// nonfaces (bitmasks): F is a face iff no minimal nonface is a subset
// of F. A nonface equal to the empty set makes the complex void.
struct SimplicialComplex {
    int nverts = 0;
    std::vector<std::uint64_t> min_nonfaces;

    bool is_face(std::uint64_t f) const {
        for (auto nf : min_nonfaces)
            if ((nf & f) == nf) return false;
        return true;
    }
};

// Stanley-Reisner complex of a squarefree monomial ideal: ground set the
// variables, minimal nonfaces the minimal generators.
inline SimplicialComplex stanley_reisner(const SquarefreeMonomialIdeal& ideal) {
    for (auto gen : ideal.min_gens)
        if (gen == 0) throw GraphError("stanley_reisner: zero generator");
    return {ideal.nvars, ideal.min_gens};
}

// Subcomplex induced on the vertex subset W (bitmask), with vertices
// renumbered to 0..|W|-1 in increasing original order. Minimal nonfaces
// of the restriction are the minimal nonfaces inside W; minimality is
// preserved because the originals form an antichain.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, std::uint64_t w) {
    std::vector<int> pos(c.nverts, -1);
    int m = 0;
    for (int v = 0; v < c.nverts; ++v)
        if (w & (std::uint64_t{1} << v)) pos[v] = m++;
    SimplicialComplex out;
    out.nverts = m;
    for (auto nf : c.min_nonfaces) {
        if ((nf & w) != nf) continue;
        std::uint64_t packed = 0;
        for (int v = 0; v < c.nverts; ++v)
            if (nf & (std::uint64_t{1} << v)) packed |= std::uint64_t{1} << pos[v];
        out.min_nonfaces.push_back(packed);
    }
    return out;
}

// Faces grouped by cardinality: result[s] lists the faces with s
// vertices, each as a bitmask, in increasing mask order. result[0] holds
// the empty face unless the complex is void.
inline std::vector<std::vector<std::uint64_t>> faces_by_size(const SimplicialComplex& c) {
    std::vector<std::vector<std::uint64_t>> out(1);
    if (!c.is_face(0)) {
        out.clear();
        return out;
    }
    out[0].push_back(0);
    // nonfaces containing v, with v removed, for the incremental check
    std::vector<std::vector<std::uint64_t>> gens_of(c.nverts);
    for (auto nf : c.min_nonfaces)
        for (int v = 0; v < c.nverts; ++v)
            if (nf & (std::uint64_t{1} << v)) gens_of[v].push_back(nf & ~(std::uint64_t{1} << v));

    // depth-first extension by vertices larger than the current maximum;
    // adding v to face f stays a face iff no nonface N with v in N has
    // N minus v inside f
    std::vector<std::pair<std::uint64_t, int>> stack{{0, -1}};
    while (!stack.empty()) {
        auto [f, maxv] = stack.back();
        stack.pop_back();
        for (int v = maxv + 1; v < c.nverts; ++v) {
            bool ok = true;
            for (auto rest : gens_of[v])
                if ((rest & f) == rest) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::uint64_t nf = f | (std::uint64_t{1} << v);
            int s = std::popcount(nf);
            if (static_cast<int>(out.size()) <= s) out.resize(s + 1);
            out[s].push_back(nf);
            stack.push_back({nf, v});
        }
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_COMPLEX_HPP
