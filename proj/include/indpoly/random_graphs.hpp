#pragma once

#include "indpoly/graph.hpp"

#include <random>

namespace indpoly {

/// Draws use plain modulo reduction so a seed gives the same graph on every
/// standard library.
using Rng = std::mt19937_64;

std::size_t uniform_below(Rng &rng, std::size_t bound);

/// Each pair present independently with probability num/den.
Graph random_graph(std::size_t n, std::size_t num, std::size_t den, Rng &rng);

/// Vertex i > 0 hangs on a uniformly chosen earlier vertex.
Graph random_tree(std::size_t n, Rng &rng);

/// Line graph of a random graph; always claw-free. The result has at most
/// max_order vertices.
Graph random_line_graph(std::size_t max_order, Rng &rng);

Graph line_graph(const Graph &g);

}  // namespace indpoly
