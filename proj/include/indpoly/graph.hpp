#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

using VertexId = std::uint32_t;

/// Marks a vertex that did not survive a deletion in an old->new map.
inline constexpr VertexId kRemoved = std::numeric_limits<VertexId>::max();

struct Edge {
    VertexId u;
    VertexId v;

    auto operator<=>(const Edge &) const = default;
};

/// Invalid vertex, edge, or structural precondition.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard was exceeded (exponential algorithms fail loudly).
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency lists are sorted and symmetric; loops and parallel edges are
/// rejected or collapsed at construction.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on an out-of-range endpoint or a self-loop.
    /// Duplicate edges (in either orientation) collapse to one.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adjacency_.empty(); }

    const std::vector<VertexId> &neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;
    bool contains(VertexId v) const noexcept { return v < order(); }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Bitmask adjacency; only valid for order() <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph &) const = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph build(std::size_t n, std::span<const Edge> edges);

// Constructions ------------------------------------------------------------

/// g2's vertices are shifted by g1.order().
Graph disjoint_union(const Graph &g1, const Graph &g2);
Graph disjoint_union(std::span<const Graph> parts);
Graph copies(const Graph &g, std::size_t count);

/// Disjoint union plus every edge between the two sides.
Graph zykov_sum(const Graph &g1, const Graph &g2);

/// (g1;v1) edge-join (g2;v2): disjoint union plus the edge v1 -- (v2 + |g1|).
Graph edge_join(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2);

/// Copy of g with `add` inserted and `remove` deleted. Removing a missing
/// edge or adding an existing one throws.
Graph with_edges(const Graph &g, std::span<const Edge> add, std::span<const Edge> remove);

// Deletions ----------------------------------------------------------------

/// An induced subgraph together with the relabelling that produced it.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> old_to_new;  // kRemoved for deleted vertices
    std::vector<VertexId> new_to_old;
};

Subgraph induced_subgraph(const Graph &g, std::span<const VertexId> keep);
Subgraph delete_vertices(const Graph &g, std::span<const VertexId> removed);
Subgraph delete_vertex(const Graph &g, VertexId v);
/// G - N[v]
Subgraph delete_closed_neighborhood(const Graph &g, VertexId v);
/// G - (N(u) u N(v)); for an edge uv this removes u and v as well.
Subgraph delete_open_neighborhoods(const Graph &g, VertexId u, VertexId v);
Graph delete_edge(const Graph &g, VertexId u, VertexId v);

// Predicates ---------------------------------------------------------------

bool is_simplicial(const Graph &g, VertexId v);
bool is_pendant(const Graph &g, VertexId v);
bool is_clique(const Graph &g, std::span<const VertexId> vertices);

/// Centre first, then three pairwise non-adjacent neighbours.
using Claw = std::array<VertexId, 4>;
std::optional<Claw> find_claw(const Graph &g);
bool is_claw_free(const Graph &g);

std::vector<std::vector<VertexId>> connected_components(const Graph &g);
bool is_connected(const Graph &g);
bool is_forest(const Graph &g);
bool is_tree(const Graph &g);

// Stable sets --------------------------------------------------------------

inline constexpr std::size_t kDefaultStableSetBound = 24;

/// Every inclusion-maximal stable set exactly once, each sorted ascending.
/// The empty graph yields a single empty set. Throws BoundExceeded when
/// g.order() > bound.
std::vector<std::vector<VertexId>> maximal_stable_sets(
    const Graph &g, std::size_t bound = kDefaultStableSetBound);

std::size_t stability_number(const Graph &g, std::size_t bound = kDefaultStableSetBound);

struct WellCoveredVerdict {
    bool well_covered;
    std::size_t min_size;
    std::size_t max_size;
    /// On failure: one maximal stable set of each extreme size.
    std::vector<VertexId> smallest;
    std::vector<VertexId> largest;
};

WellCoveredVerdict well_covered_verdict(const Graph &g, std::size_t bound = kDefaultStableSetBound);
bool is_well_covered(const Graph &g, std::size_t bound = kDefaultStableSetBound);

/// Perfect matching made of pendant edges, if the tree has one.
/// Throws GraphError when g is not a tree.
std::optional<std::vector<Edge>> pendant_perfect_matching(const Graph &g);

/// K1, or a tree with a perfect matching of pendant edges. Throws GraphError
/// when g is not a tree.
bool is_well_covered_tree(const Graph &g);

/// v is a simplicial vertex whose closed neighbourhood holds at least one
/// other simplicial vertex. This is the side condition under which an
/// edge-join of two well-covered graphs stays well-covered.
bool is_join_admissible(const Graph &g, VertexId v);

// Rewrites -----------------------------------------------------------------

/// Replaces edge cd by ac on an induced path a-b-c-d whose ends a and d are
/// pendant. b and c may carry arbitrary further neighbours; the independence
/// polynomial is unchanged. Throws GraphError if the pattern does not match.
Graph rewire_p4_appendage(const Graph &g, VertexId a, VertexId b, VertexId c, VertexId d);

// Isomorphism --------------------------------------------------------------

inline constexpr std::size_t kCanonicalFormBound = 10;

/// Lexicographically least sorted edge list over all relabellings.
/// Throws BoundExceeded above kCanonicalFormBound vertices.
std::vector<Edge> canonical_form(const Graph &g);

/// Packed form of canonical_form(): bit (i,j) set for each canonical edge.
/// Pair order is row-major over i < j, most significant first.
std::uint64_t canonical_code(const Graph &g);

/// Isomorphism-invariant string for trees of any order (centre-rooted
/// AHU encoding). Throws GraphError when g is not a tree.
std::string tree_canonical_string(const Graph &g);

std::string to_string(const Graph &g);

}  // namespace indpoly
