#pragma once

// Compares library path answers with the oracles in oracles.hpp.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semilin/graph.hpp"
#include "semilin/ldm.hpp"
#include "support/oracles.hpp"

namespace semilin::testing {

/// Graph file text; `weight` renders arc k's label.
template <class Label>
std::string graph_text(const Digraph& g, Label weight) {
    std::ostringstream out;
    out << g.nodes << ' ' << g.arcs.size() << '\n';
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
        out << g.arcs[k].from + 1 << ' ' << g.arcs[k].to + 1 << ' ' << weight(g.arcs[k]) << '\n';
    }
    return out.str();
}

inline std::string reliability_label(const Arc& a) { return std::to_string(a.weight) + "/10"; }
inline std::string integer_label(const Arc& a) { return std::to_string(a.weight); }

inline std::vector<Element> library_path_values(const std::string& text, PathProblem::Kind kind, int target) {
    PathProblem p;
    p.kind = kind;
    p.target = static_cast<std::size_t>(target) + 1;
    const auto sys = graph_to_bellman(parse_graph_file(text), p);
    return ldm_solve(ldm_factorize(sys.a).factors, std::span<const Element>(sys.b)).x;
}

/// Empty string on agreement, else a description of the first mismatch.
inline std::string compare_shortest(const Digraph& g, int target) {
    const auto got = library_path_values(graph_text(g, integer_label), PathProblem::Kind::shortest, target);
    const auto want = bellman_ford_to(g, target);
    for (int u = 0; u < g.nodes; ++u) {
        const Element expected = want[u] ? Element{Rational(*want[u])} : Element{Infinity::positive};
        if (!(got[u] == expected)) {
            return "shortest node " + std::to_string(u + 1) + ": got " + format_element(got[u]) + ", want " +
                   format_element(expected);
        }
    }
    return {};
}

inline std::string compare_widest(const Digraph& g, int target) {
    const auto got = library_path_values(graph_text(g, integer_label), PathProblem::Kind::widest, target);
    std::vector<long> width;
    for (const auto& a : g.arcs) width.push_back(a.weight);
    constexpr long unbounded = 1L << 40;
    for (int u = 0; u < g.nodes; ++u) {
        const auto best = best_simple_path<long>(
            g, u, target, unbounded, [](long acc, long w) { return std::min(acc, w); },
            [](long x, long y) { return x > y; }, width);
        Element expected = Infinity::negative;
        if (best) expected = *best == unbounded ? Element{Infinity::positive} : Element{Rational(*best)};
        if (!(got[u] == expected)) {
            return "widest node " + std::to_string(u + 1) + ": got " + format_element(got[u]) + ", want " +
                   format_element(expected);
        }
    }
    return {};
}

inline std::string compare_reliable(const Digraph& g, int target) {
    const auto got = library_path_values(graph_text(g, reliability_label), PathProblem::Kind::most_reliable, target);
    std::vector<Rational> prob;
    for (const auto& a : g.arcs) prob.emplace_back(a.weight, 10);
    for (int u = 0; u < g.nodes; ++u) {
        const auto best = best_simple_path<Rational>(
            g, u, target, Rational(1), [](const Rational& acc, const Rational& w) { return acc * w; },
            [](const Rational& x, const Rational& y) { return x > y; }, prob);
        const Element expected = Rational(best ? *best : Rational(0));
        if (!(got[u] == expected)) {
            return "reliable node " + std::to_string(u + 1) + ": got " + format_element(got[u]) + ", want " +
                   format_element(expected);
        }
    }
    return {};
}

}  // namespace semilin::testing
