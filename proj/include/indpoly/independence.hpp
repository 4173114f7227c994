#pragma once

#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace indpoly {

enum class Method { Oracle, VertexRecursion, CliqueRecursion, EdgeRecursion, TreeDP, Auto };

std::string_view method_name(Method m);
/// "oracle", "vertex-recursion", "clique-recursion", "edge-recursion", "tree-dp", "auto".
/// Throws std::invalid_argument for anything else.
Method parse_method(std::string_view name);

struct Options {
    /// Largest graph the subset enumeration accepts.
    std::size_t oracle_bound = 25;
    /// Distinct subproblems a recursion may expand before giving up.
    std::size_t node_budget = 5'000'000;
};

/// Counts stable sets directly by enumerating them.
IntPoly oracle_indpoly(const Graph &g, const Options &opts = {});

/// I(G) = I(G - w) + x I(G - N[w]) with w of maximum degree (lowest index
/// on ties), splitting into components at every step.
IntPoly vertex_recursion(const Graph &g, const Options &opts = {});

/// I(G) = I(G - U) + x sum_{v in U} I(G - N[v]) over a greedily grown
/// maximal clique U at every step.
IntPoly clique_recursion(const Graph &g, const Options &opts = {});
/// Uses `clique` for the first step. Throws GraphError unless it is a
/// nonempty clique of g.
IntPoly clique_recursion(const Graph &g, std::span<const VertexId> clique, const Options &opts = {});

/// I(G) = I(G - uv) - x^2 I(G - (N(u) u N(v))) on an edge at a vertex of
/// least positive degree.
IntPoly edge_recursion(const Graph &g, const Options &opts = {});
/// Uses edge uv for the first step. Throws GraphError when uv is not an edge.
IntPoly edge_recursion(const Graph &g, VertexId u, VertexId v, const Options &opts = {});

/// Rooted dynamic program over a forest. Throws GraphError on a cycle.
IntPoly tree_dp(const Graph &g);

/// Dispatches to one method. Auto picks tree_dp for forests and
/// vertex_recursion otherwise. Every result is checked against
/// s0 = 1, s1 = |V| and s2 = C(|V|,2) - |E|.
IntPoly independence_polynomial(const Graph &g, Method method = Method::Auto, const Options &opts = {});

/// I(G1) I(G2) - x^2 I(G1 - N[v1]) I(G2 - N[v2]), evaluated from the parts.
IntPoly edge_join_formula(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2);

}  // namespace indpoly
