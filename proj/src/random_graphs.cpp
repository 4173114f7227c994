#include "indpoly/random_graphs.hpp"

#include <algorithm>

namespace indpoly {

std::size_t uniform_below(Rng &rng, std::size_t bound)
{
    return bound == 0 ? 0 : static_cast<std::size_t>(rng() % bound);
}

Graph random_graph(std::size_t n, std::size_t num, std::size_t den, Rng &rng)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (uniform_below(rng, den) < num)
                edges.push_back({u, v});
    return Graph(n, edges);
}

Graph random_tree(std::size_t n, Rng &rng)
{
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v)
        edges.push_back({static_cast<VertexId>(uniform_below(rng, v)), v});
    return Graph(n, edges);
}

Graph line_graph(const Graph &g)
{
    const auto es = g.edges();
    std::vector<Edge> out;
    for (VertexId i = 0; i < es.size(); ++i)
        for (VertexId j = i + 1; j < es.size(); ++j)
            if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
                out.push_back({i, j});
    return Graph(es.size(), out);
}

Graph random_line_graph(std::size_t max_order, Rng &rng)
{
    const std::size_t base = 2 + uniform_below(rng, 5);
    auto g = random_graph(base, 1, 2, rng);
    auto es = g.edges();
    while (es.size() > max_order)
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, es.size())));
    return line_graph(Graph(base, es));
}

}  // namespace indpoly
