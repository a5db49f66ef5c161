#ifndef CACTUSREG_GRAPH_IO_HPP
#define CACTUSREG_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cactusreg/graph.hpp"

namespace cactusreg {

// Edge-list format: optional first data line "n m", then one "u v" line
// per edge. '#' starts a comment, blank lines are ignored. The first data
// line counts as the header exactly when its second number equals the
// number of remaining data lines; the writer always emits the header, so
// files round-trip. Without a header, n is the largest label seen.
inline Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<long long, long long>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(ls >> b) || (ls >> trailing))
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        rows.push_back({a, b});
    }
    if (rows.empty()) return make_graph(0, {});

    bool has_header = rows.size() >= 1 && rows[0].second == static_cast<long long>(rows.size()) - 1 &&
                      rows[0].first >= 0;
    long long n = 0;
    size_t first_edge = 0;
    if (has_header) {
        n = rows[0].first;
        first_edge = 1;
    } else {
        for (auto [u, v] : rows) n = std::max({n, u, v});
    }
    if (n > 1000000) throw ParseError("vertex count too large");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = first_edge; i < rows.size(); ++i) {
        auto [u, v] = rows[i];
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

inline Graph graph_from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string edge_list_text(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace cactusreg

#endif  // CACTUSREG_GRAPH_IO_HPP
