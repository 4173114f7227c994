#pragma once

#include "indpoly/graph.hpp"

namespace fixture {

using indpoly::Graph;

/// Well-covered tree on 10 vertices: a row of five pendant-matched edges.
inline Graph tree_t1()
{
    return Graph(10, {{0, 1}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {1, 5}, {5, 9}, {2, 6}, {3, 7}});
}

/// Well-covered tree on 12 vertices.
inline Graph tree_t2()
{
    return Graph(12, {{0, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {10, 11}, {1, 6}, {6, 11}, {2, 7}, {3, 8}, {4, 9}});
}

/// K2 attached to a triangle; shares its polynomial with C5.
inline Graph k2_triangle()
{
    return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {4, 2}});
}

/// Path p0-p1-p2-p3 with one leaf on each of p1 and p2.
inline Graph double_broom()
{
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
}

/// K4 minus an edge, plus two isolated vertices.
inline Graph diamond_and_two_points()
{
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace fixture
