#pragma once

#include "indpoly/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace indpoly {

enum class FamilyKind {
    Complete,
    Path,
    Cycle,
    Star,
    CompleteMultipartite,
    Spider,
    Centipede,
    TriangleChain,
    K2TriangleChain,
    Gmn,
};

/// A named family instance, e.g. {Spider, {6}} or {Gmn, {2, 4}}.
struct FamilySpec {
    FamilyKind kind;
    std::vector<std::size_t> params;

    /// Throws GraphError when the parameters do not fit the kind.
    void validate() const;
    std::string name() const;

    /// Accepts e.g. {"spider", "6"}, {"gmn", "2", "4"}, {"multipartite", "2", "2", "3"}.
    static FamilySpec parse(const std::vector<std::string> &tokens);
};

std::string_view family_name(FamilyKind kind);

/// Canonical labelled instance of the family.
Graph generate(const FamilySpec &spec);

Graph complete(std::size_t n);
/// n vertices in a row.
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,n}, hub 0.
Graph star(std::size_t n);
Graph complete_multipartite(const std::vector<std::size_t> &parts);

/// Well-covered spider S_n: hub b0 = 0, b_i = i, a0 = n+1, a_i = n+1+i.
/// Edges a0b0, a_ib_i, b0b_i.
Graph spider(std::size_t n);
namespace spider_vertex {
inline VertexId hub() { return 0; }
inline VertexId leg(std::size_t, std::size_t i) { return static_cast<VertexId>(i); }
inline VertexId foot(std::size_t n, std::size_t i) { return static_cast<VertexId>(n + 1 + i); }
}  // namespace spider_vertex

/// Centipede W_n: spine b_i = i-1, tooth a_i = n+i-1, for i = 1..n.
Graph centipede(std::size_t n);
inline VertexId centipede_spine(std::size_t, std::size_t i) { return static_cast<VertexId>(i - 1); }
inline VertexId centipede_tooth(std::size_t n, std::size_t i) { return static_cast<VertexId>(n + i - 1); }

/// Triangle chain: triangle i occupies 3i-3..3i-1, and v_{3i-1} is joined to
/// v_{3i+1} (1-based names). The empty graph for n = 0.
Graph triangle_chain(std::size_t n);

/// Triangle chain plus u1 = 3n, u2 = 3n+1 with edges u1u2 and u2v1. n >= 1.
Graph k2_triangle_chain(std::size_t n);

/// (W_m; b2) edge-joined to (W_n; b2). b2 of the second centipede lands on
/// index 2m+1.
Graph gmn(std::size_t m, std::size_t n);
inline VertexId gmn_left_join(std::size_t) { return 1; }
inline VertexId gmn_right_join(std::size_t m) { return static_cast<VertexId>(2 * m + 1); }

}  // namespace indpoly
