#include "indpoly/enumerate.hpp"

#include <map>
#include <set>
#include <string>

namespace indpoly {

namespace {

Graph from_code(std::size_t n, std::uint64_t code)
{
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Edge> edges;
    std::size_t t = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++t)
            if (code >> (pairs - 1 - t) & 1)
                edges.push_back({i, j});
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(std::size_t order)
{
    if (order > kMaxEnumeratedGraphOrder)
        throw BoundExceeded("graph enumeration limited to order " + std::to_string(kMaxEnumeratedGraphOrder));
    if (order == 0)
        return {Graph()};

    // Every graph on k+1 vertices is some graph on k vertices plus one vertex.
    std::vector<Graph> level{Graph(1, {})};
    for (std::size_t k = 1; k < order; ++k) {
        std::set<std::uint64_t> codes;
        for (const auto &g : level) {
            const auto base = g.edges();
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << k); ++nbrs) {
                auto edges = base;
                for (VertexId v = 0; v < k; ++v)
                    if (nbrs >> v & 1)
                        edges.push_back({v, static_cast<VertexId>(k)});
                codes.insert(canonical_code(Graph(k + 1, edges)));
            }
        }
        level.clear();
        for (auto code : codes)
            level.push_back(from_code(k + 1, code));
    }
    return level;
}

std::vector<Graph> nonisomorphic_trees(std::size_t order)
{
    if (order > kMaxEnumeratedTreeOrder)
        throw BoundExceeded("tree enumeration limited to order " + std::to_string(kMaxEnumeratedTreeOrder));
    if (order == 0)
        return {};

    std::vector<Graph> level{Graph(1, {})};
    for (std::size_t k = 1; k < order; ++k) {
        std::map<std::string, Graph> seen;
        for (const auto &t : level)
            for (VertexId v = 0; v < k; ++v) {
                auto edges = t.edges();
                edges.push_back({v, static_cast<VertexId>(k)});
                Graph bigger(k + 1, edges);
                seen.try_emplace(tree_canonical_string(bigger), std::move(bigger));
            }
        level.clear();
        for (auto &[key, tree] : seen)
            level.push_back(std::move(tree));
    }
    return level;
}

}  // namespace indpoly
