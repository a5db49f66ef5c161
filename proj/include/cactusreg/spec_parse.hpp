#ifndef CACTUSREG_SPEC_PARSE_HPP
#define CACTUSREG_SPEC_PARSE_HPP

#include <string>
#include <vector>

#include "cactusreg/cm_cactus.hpp"
#include "cactusreg/errors.hpp"
#include "cactusreg/graph.hpp"

namespace cactusreg {

// Builder-spec mini-language:
//   path:N cycle:N complete:N diamond
//   paper:G1 paper:G2
//   lemma41:K,M1,M2 lemma42:K,M1,M2
//   chain:TOK,TOK,...      TOK = K<m> | C<k> | C<k>@<d>
//   sum:SPEC+SPEC@vertex   glue vertex 1 of each operand (default)
//   sum:SPEC+SPEC@edge     glue edge {1,2} of each operand
// sum is left-associative; operands are any non-sum spec.

namespace detail {

inline int parse_int(const std::string& text, const std::string& what) {
    if (text.empty()) throw ParseError("expected a number for " + what);
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + text + "' for " + what);
    }
    if (pos != text.size()) throw ParseError("bad number '" + text + "' for " + what);
    return value;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline ChainToken parse_chain_token(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'K' && text[0] != 'C'))
        throw ParseError("chain token '" + text + "' must look like K<m>, C<k>, or C<k>@<d>");
    ChainToken tok;
    tok.is_cycle = text[0] == 'C';
    std::string body = text.substr(1);
    if (size_t at = body.find('@'); at != std::string::npos) {
        if (!tok.is_cycle) throw ParseError("cut distance is only valid on cycle tokens: '" + text + "'");
        tok.cut_distance = parse_int(body.substr(at + 1), "cut distance");
        body = body.substr(0, at);
    }
    tok.size = parse_int(body, "block size");
    return tok;
}

inline Graph parse_simple_spec(const std::string& spec) {
    if (spec == "diamond") return diamond();
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("unknown graph spec '" + spec + "'");
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "path") return path(parse_int(rest, "path length"));
    if (head == "cycle") return cycle(parse_int(rest, "cycle length"));
    if (head == "complete") return complete_graph(parse_int(rest, "clique size"));
    if (head == "paper") {
        auto pair = paper_example_graphs();
        if (rest == "G1") return pair.first;
        if (rest == "G2") return pair.second;
        throw ParseError("paper graph must be G1 or G2, got '" + rest + "'");
    }
    if (head == "lemma41" || head == "lemma42") {
        auto parts = split(rest, ',');
        if (parts.size() != 3)
            throw ParseError(head + " needs k,m1,m2");
        int k = parse_int(parts[0], "cycle length");
        int m1 = parse_int(parts[1], "first clique size");
        int m2 = parse_int(parts[2], "second clique size");
        return head == "lemma41" ? lemma41_family(k, m1, m2) : lemma42_family(k, m1, m2);
    }
    if (head == "chain") {
        std::vector<ChainToken> toks;
        for (const auto& part : split(rest, ','))
            toks.push_back(parse_chain_token(part));
        return build_chain(toks);
    }
    throw ParseError("unknown graph spec '" + spec + "'");
}

}  // namespace detail

inline Graph graph_from_spec(const std::string& spec) {
    if (spec.rfind("sum:", 0) != 0) return detail::parse_simple_spec(spec);
    auto terms = detail::split(spec.substr(4), '+');
    if (terms.size() < 2) throw ParseError("sum needs at least two operands");
    Graph acc;
    bool first = true;
    for (auto term : terms) {
        bool glue_edge = false;
        if (term.size() >= 7 && term.compare(term.size() - 7, 7, "@vertex") == 0) {
            term = term.substr(0, term.size() - 7);
        } else if (term.size() >= 5 && term.compare(term.size() - 5, 5, "@edge") == 0) {
            glue_edge = true;
            term = term.substr(0, term.size() - 5);
        }
        Graph next = detail::parse_simple_spec(term);
        if (first) {
            if (glue_edge) throw ParseError("glue marker belongs on the right operand");
            acc = std::move(next);
            first = false;
            continue;
        }
        std::vector<int> left = glue_edge ? std::vector<int>{1, 2} : std::vector<int>{1};
        std::vector<int> right = left;
        if (glue_edge && (!acc.has_edge(1, 2) || !next.has_edge(1, 2)))
            throw ParseError("edge glue needs edge {1,2} in both operands");
        acc = clique_sum(acc, next, left, right).graph;
    }
    return acc;
}

// Spec string for a chain of tokens, e.g. "chain:K2,C4@2,K3".
inline std::string chain_spec_string(const std::vector<ChainToken>& toks) {
    std::string out = "chain:";
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) out += ',';
        out += toks[i].is_cycle ? 'C' : 'K';
        out += std::to_string(toks[i].size);
        if (toks[i].is_cycle && toks[i].cut_distance != 1)
            out += "@" + std::to_string(toks[i].cut_distance);
    }
    return out;
}

}  // namespace cactusreg

#endif  // CACTUSREG_SPEC_PARSE_HPP
