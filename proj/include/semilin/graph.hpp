#pragma once

/**
 * @file graph.hpp
 * @brief Path problems on weighted digraphs as Bellman equations.
 *
 * A[u][v] carries the arc u→v and B marks the target with 𝟏, so the solution
 * of X = A ⊙ X ⊕ B holds at index u the best value of a path from u to the
 * target. Single-source problems are obtained by reversing every arc.
 *
 * Graph file format: a line `n m` followed by m lines `u v w` (1-based node
 * indices; the weight may be omitted for reachability).
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semilin/io.hpp"

namespace semilin {

struct Edge {
    std::size_t from = 0;  ///< 1-based
    std::size_t to = 0;    ///< 1-based
    std::string weight;    ///< literal; empty when omitted
    TextLocation where;
};

struct GraphSpec {
    std::size_t nodes = 0;
    std::vector<Edge> edges;
};

struct PathProblem {
    enum class Kind { shortest, widest, most_reliable, reachability };

    Kind kind = Kind::shortest;
    std::size_t target = 1;  ///< 1-based
    Scalar widest_lower = Infinity::negative;
    Scalar widest_upper = Infinity::positive;
};

struct BellmanSystem {
    SemiringDescriptor semiring;
    DynMatrix a;
    std::vector<Element> b;
};

inline GraphSpec parse_graph_file(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw Error(errc::parse_error, "empty graph file", TextLocation{1, 1});
    const auto& head = lines[0];
    if (head.size() != 2) throw Error(errc::parse_error, "expected 'n m'", head[0].where);
    GraphSpec g;
    g.nodes = detail::parse_count(head[0], "node count");
    const std::size_t m = detail::parse_count(head[1], "edge count");
    if (g.nodes == 0) throw Error(errc::parse_error, "graph needs at least one node", head[0].where);
    if (lines.size() != m + 1) {
        const TextLocation where = lines.size() > m + 1 ? lines[m + 1][0].where
                                                        : TextLocation{lines.back()[0].where.line + 1, 1};
        throw Error(errc::parse_error, "expected " + std::to_string(m) + " edge lines, found " +
                                           std::to_string(lines.size() - 1), where);
    }
    g.edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto& line = lines[e + 1];
        if (line.size() != 2 && line.size() != 3) throw Error(errc::parse_error, "expected 'u v w'", line[0].where);
        Edge edge;
        edge.from = detail::parse_count(line[0], "node index");
        edge.to = detail::parse_count(line[1], "node index");
        for (const auto* tok : {&line[0], &line[1]}) {
            const std::size_t idx = tok == &line[0] ? edge.from : edge.to;
            if (idx < 1 || idx > g.nodes) {
                throw Error(errc::index_out_of_range, "node " + std::to_string(idx) + " outside 1.." + std::to_string(g.nodes), tok->where);
            }
        }
        if (line.size() == 3) edge.weight = std::string(line[2].text);
        edge.where = line[0].where;
        g.edges.push_back(std::move(edge));
    }
    return g;
}

inline SemiringDescriptor semiring_for(const PathProblem& p) {
    switch (p.kind) {
        case PathProblem::Kind::shortest: return SemiringDescriptor::min_plus();
        case PathProblem::Kind::widest: return SemiringDescriptor::max_min(p.widest_lower, p.widest_upper);
        case PathProblem::Kind::most_reliable: return SemiringDescriptor::max_times();
        case PathProblem::Kind::reachability: return SemiringDescriptor::boolean();
    }
    return SemiringDescriptor::min_plus();
}

namespace detail {

inline Element arc_weight(const SemiringDescriptor& s, const PathProblem& p, const Edge& e) {
    if (p.kind == PathProblem::Kind::reachability) return true;
    if (e.weight.empty()) throw Error(errc::invalid_weight, "missing arc weight", e.where);
    const auto value = parse_scalar_literal(e.weight);
    if (!value || !s.contains(to_element(*value))) {
        throw Error(errc::invalid_weight, "'" + e.weight + "' is not a weight for " + s.token(), e.where);
    }
    return to_element(*value);
}

}  // namespace detail

inline BellmanSystem graph_to_bellman(const GraphSpec& g, const PathProblem& p) {
    if (p.target < 1 || p.target > g.nodes) {
        throw Error(errc::index_out_of_range, "target " + std::to_string(p.target) + " outside 1.." + std::to_string(g.nodes));
    }
    const auto s = semiring_for(p);
    DynMatrix a(s, g.nodes, g.nodes);
    for (const auto& e : g.edges) {
        auto& entry = a(e.from - 1, e.to - 1);
        entry = s.add(entry, detail::arc_weight(s, p, e));
    }
    return {s, std::move(a), unit_vector(s, g.nodes, p.target - 1)};
}

}  // namespace semilin
