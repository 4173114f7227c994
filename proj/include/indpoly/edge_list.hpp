#pragma once

#include "indpoly/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

namespace indpoly {

/// Malformed edge-list input.
class EdgeListError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Header "n m" followed by exactly m lines "u v". Lines starting with '#'
/// and blank lines are skipped. Loops, duplicate edges, out-of-range
/// endpoints and a wrong edge count are errors.
Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::filesystem::path &path);

/// Header then edges with u < v in ascending order.
void write_edge_list(std::ostream &out, const Graph &g);
void write_edge_list_file(const std::filesystem::path &path, const Graph &g);

}  // namespace indpoly
