#pragma once

#include "indpoly/graph.hpp"

#include <vector>

namespace indpoly {

inline constexpr std::size_t kMaxEnumeratedGraphOrder = 7;
inline constexpr std::size_t kMaxEnumeratedTreeOrder = 12;

/// One representative per isomorphism class of graphs on exactly `order`
/// vertices, each in canonical labelling, sorted by canonical code.
/// Throws BoundExceeded above kMaxEnumeratedGraphOrder.
std::vector<Graph> nonisomorphic_graphs(std::size_t order);

/// One representative per isomorphism class of trees on exactly `order`
/// vertices. Throws BoundExceeded above kMaxEnumeratedTreeOrder.
std::vector<Graph> nonisomorphic_trees(std::size_t order);

}  // namespace indpoly
