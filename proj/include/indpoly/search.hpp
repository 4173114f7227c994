#pragma once

#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

#include <utility>
#include <vector>

namespace indpoly {

inline constexpr std::size_t kMaxSearchTreeOrder = 10;
inline constexpr std::size_t kMaxSearchGraphOrder = 7;

struct PolynomialTwin {
    Graph tree;
    Graph graph;
    IntPoly poly;
};

struct TreeTwinSearch {
    std::size_t trees_examined = 0;
    std::size_t well_covered_trees = 0;
    std::size_t graphs_examined = 0;
    /// (well-covered tree, graph) pairs with equal polynomials.
    std::size_t pairs_examined = 0;
    std::size_t confirmations = 0;
    /// Well-covered tree sharing its polynomial with a graph that is not well-covered.
    std::vector<PolynomialTwin> counterexamples;
    /// Tree that is not well-covered sharing its polynomial with a well-covered graph.
    std::vector<PolynomialTwin> uncovered_tree_twins;
};

/// Matches every tree up to max_tree_order against every graph up to
/// max_graph_order by independence polynomial. Throws std::invalid_argument
/// beyond kMaxSearchTreeOrder or kMaxSearchGraphOrder.
TreeTwinSearch search_tree_twins(std::size_t max_tree_order, std::size_t max_graph_order);

struct UnimodalitySweep {
    std::size_t graphs_examined = 0;
    std::size_t well_covered = 0;
    std::vector<Graph> violations;
    std::size_t claw_free = 0;
    std::vector<Graph> claw_free_violations;
};

/// Unimodality of every well-covered and every claw-free graph up to
/// max_order. Throws std::invalid_argument beyond kMaxSearchGraphOrder.
UnimodalitySweep wellcovered_unimodality_sweep(std::size_t max_order);

}  // namespace indpoly
