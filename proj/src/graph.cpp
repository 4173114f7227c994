#include "indpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace indpoly {

namespace {

void require_vertex(const Graph &g, VertexId v, const char *what)
{
    if (!g.contains(v))
        throw GraphError(std::string(what) + ": vertex " + std::to_string(v) +
                         " out of range for graph of order " + std::to_string(g.order()));
}

std::vector<Edge> to_edges(std::initializer_list<std::pair<VertexId, VertexId>> pairs)
{
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs)
        out.push_back({u, v});
    return out;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n)
{
    for (const auto &e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto &row : adjacency_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        edge_count_ += row.size();
    }
    edge_count_ /= 2;
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : Graph(n, to_edges(edges))
{
}

const std::vector<VertexId> &Graph::neighbors(VertexId v) const
{
    require_vertex(*this, v, "neighbors");
    return adjacency_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    const auto &row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const
{
    if (order() > 64)
        throw BoundExceeded("bitmask adjacency needs at most 64 vertices");
    std::vector<std::uint64_t> masks(order(), 0);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adjacency_[u])
            masks[u] |= std::uint64_t{1} << v;
    return masks;
}

Graph build(std::size_t n, std::span<const Edge> edges)
{
    return Graph(n, edges);
}

// Constructions ------------------------------------------------------------

Graph disjoint_union(const Graph &g1, const Graph &g2)
{
    std::array<Graph, 2> parts{g1, g2};
    return disjoint_union(parts);
}

Graph disjoint_union(std::span<const Graph> parts)
{
    std::vector<Edge> edges;
    std::size_t offset = 0;
    for (const auto &g : parts) {
        for (auto e : g.edges())
            edges.push_back({static_cast<VertexId>(e.u + offset), static_cast<VertexId>(e.v + offset)});
        offset += g.order();
    }
    return Graph(offset, edges);
}

Graph copies(const Graph &g, std::size_t count)
{
    std::vector<Graph> parts(count, g);
    return disjoint_union(parts);
}

Graph zykov_sum(const Graph &g1, const Graph &g2)
{
    auto edges = disjoint_union(g1, g2).edges();
    const auto n1 = static_cast<VertexId>(g1.order());
    for (VertexId u = 0; u < g1.order(); ++u)
        for (VertexId v = 0; v < g2.order(); ++v)
            edges.push_back({u, static_cast<VertexId>(v + n1)});
    return Graph(g1.order() + g2.order(), edges);
}

Graph edge_join(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2)
{
    require_vertex(g1, v1, "edge_join");
    require_vertex(g2, v2, "edge_join");
    auto edges = disjoint_union(g1, g2).edges();
    edges.push_back({v1, static_cast<VertexId>(v2 + g1.order())});
    return Graph(g1.order() + g2.order(), edges);
}

Graph with_edges(const Graph &g, std::span<const Edge> add, std::span<const Edge> remove)
{
    auto edges = g.edges();
    auto normal = [](Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; };
    for (auto e : remove) {
        auto it = std::find(edges.begin(), edges.end(), normal(e));
        if (it == edges.end())
            throw GraphError("cannot remove missing edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        edges.erase(it);
    }
    for (auto e : add) {
        if (e.u < g.order() && e.v < g.order() && e.u != e.v && g.adjacent(e.u, e.v))
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") already present");
        edges.push_back(e);
    }
    return Graph(g.order(), edges);
}

// Deletions ----------------------------------------------------------------

Subgraph induced_subgraph(const Graph &g, std::span<const VertexId> keep)
{
    Subgraph out;
    out.old_to_new.assign(g.order(), kRemoved);
    for (VertexId v : keep) {
        require_vertex(g, v, "induced_subgraph");
        out.old_to_new[v] = 0;
    }
    for (VertexId v = 0; v < g.order(); ++v)
        if (out.old_to_new[v] != kRemoved) {
            out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (out.old_to_new[e.u] != kRemoved && out.old_to_new[e.v] != kRemoved)
            edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v]});
    out.graph = Graph(out.new_to_old.size(), edges);
    return out;
}

Subgraph delete_vertices(const Graph &g, std::span<const VertexId> removed)
{
    std::vector<bool> gone(g.order(), false);
    for (VertexId v : removed) {
        require_vertex(g, v, "delete_vertices");
        gone[v] = true;
    }
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.order(); ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

Subgraph delete_vertex(const Graph &g, VertexId v)
{
    std::array<VertexId, 1> one{v};
    return delete_vertices(g, one);
}

Subgraph delete_closed_neighborhood(const Graph &g, VertexId v)
{
    auto removed = g.neighbors(v);
    removed.push_back(v);
    return delete_vertices(g, removed);
}

Subgraph delete_open_neighborhoods(const Graph &g, VertexId u, VertexId v)
{
    auto removed = g.neighbors(u);
    const auto &nv = g.neighbors(v);
    removed.insert(removed.end(), nv.begin(), nv.end());
    return delete_vertices(g, removed);
}

Graph delete_edge(const Graph &g, VertexId u, VertexId v)
{
    require_vertex(g, u, "delete_edge");
    require_vertex(g, v, "delete_edge");
    std::array<Edge, 1> e{Edge{u, v}};
    return with_edges(g, {}, e);
}

// Predicates ---------------------------------------------------------------

bool is_clique(const Graph &g, std::span<const VertexId> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_simplicial(const Graph &g, VertexId v)
{
    return is_clique(g, g.neighbors(v));
}

bool is_pendant(const Graph &g, VertexId v)
{
    return g.degree(v) == 1;
}

std::optional<Claw> find_claw(const Graph &g)
{
    for (VertexId c = 0; c < g.order(); ++c) {
        const auto &nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j]))
                    continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return Claw{c, nb[i], nb[j], nb[k]};
            }
    }
    return std::nullopt;
}

bool is_claw_free(const Graph &g)
{
    return !find_claw(g).has_value();
}

std::vector<std::vector<VertexId>> connected_components(const Graph &g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.order(), false);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        auto &comp = out.emplace_back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool is_connected(const Graph &g)
{
    return connected_components(g).size() <= 1;
}

bool is_forest(const Graph &g)
{
    return g.size() + connected_components(g).size() == g.order();
}

bool is_tree(const Graph &g)
{
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

// Stable sets --------------------------------------------------------------

namespace {

// Bron-Kerbosch with Tomita pivoting, run on the complement.
void enumerate_maximal(const std::vector<std::uint64_t> &anti, std::uint64_t chosen,
                       std::uint64_t candidates, std::uint64_t excluded,
                       std::vector<std::uint64_t> &out)
{
    if (candidates == 0) {
        if (excluded == 0)
            out.push_back(chosen);
        return;
    }
    std::uint64_t pool = candidates | excluded;
    VertexId pivot = 0;
    int best = -1;
    while (pool) {
        auto u = static_cast<VertexId>(std::countr_zero(pool));
        pool &= pool - 1;
        int score = std::popcount(candidates & anti[u]);
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    std::uint64_t branch = candidates & ~anti[pivot];
    while (branch) {
        auto v = static_cast<VertexId>(std::countr_zero(branch));
        std::uint64_t bit = std::uint64_t{1} << v;
        branch &= branch - 1;
        enumerate_maximal(anti, chosen | bit, candidates & anti[v], excluded & anti[v], out);
        candidates &= ~bit;
        excluded |= bit;
    }
}

}  // namespace

std::vector<std::vector<VertexId>> maximal_stable_sets(const Graph &g, std::size_t bound)
{
    if (g.order() > bound || g.order() > 64)
        throw BoundExceeded("maximal stable set enumeration limited to " + std::to_string(bound) +
                            " vertices, graph has " + std::to_string(g.order()));
    const std::size_t n = g.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto adj = g.adjacency_masks();
    std::vector<std::uint64_t> anti(n);
    for (std::size_t v = 0; v < n; ++v)
        anti[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);

    std::vector<std::uint64_t> masks;
    enumerate_maximal(anti, 0, all, 0, masks);
    std::sort(masks.begin(), masks.end());

    std::vector<std::vector<VertexId>> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        auto &set = out.emplace_back();
        while (m) {
            set.push_back(static_cast<VertexId>(std::countr_zero(m)));
            m &= m - 1;
        }
    }
    return out;
}

std::size_t stability_number(const Graph &g, std::size_t bound)
{
    std::size_t best = 0;
    for (const auto &s : maximal_stable_sets(g, bound))
        best = std::max(best, s.size());
    return best;
}

WellCoveredVerdict well_covered_verdict(const Graph &g, std::size_t bound)
{
    auto sets = maximal_stable_sets(g, bound);
    WellCoveredVerdict out{true, sets.front().size(), sets.front().size(), sets.front(), sets.front()};
    for (const auto &s : sets) {
        if (s.size() < out.min_size) {
            out.min_size = s.size();
            out.smallest = s;
        }
        if (s.size() > out.max_size) {
            out.max_size = s.size();
            out.largest = s;
        }
    }
    out.well_covered = out.min_size == out.max_size;
    return out;
}

bool is_well_covered(const Graph &g, std::size_t bound)
{
    return well_covered_verdict(g, bound).well_covered;
}

std::optional<std::vector<Edge>> pendant_perfect_matching(const Graph &g)
{
    if (!is_tree(g))
        throw GraphError("pendant_perfect_matching: input is not a tree");
    std::vector<VertexId> mate(g.order(), kRemoved);
    for (VertexId leaf = 0; leaf < g.order(); ++leaf) {
        if (g.degree(leaf) != 1 || mate[leaf] != kRemoved)
            continue;
        VertexId p = g.neighbors(leaf).front();
        if (mate[p] != kRemoved)
            return std::nullopt;  // two leaves hang on the same vertex
        mate[leaf] = p;
        mate[p] = leaf;
    }
    std::vector<Edge> matching;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (mate[v] == kRemoved)
            return std::nullopt;
        if (v < mate[v])
            matching.push_back({v, mate[v]});
    }
    return matching;
}

bool is_well_covered_tree(const Graph &g)
{
    if (!is_tree(g))
        throw GraphError("is_well_covered_tree: input is not a tree");
    return g.order() == 1 || pendant_perfect_matching(g).has_value();
}

bool is_join_admissible(const Graph &g, VertexId v)
{
    if (!is_simplicial(g, v))
        return false;
    for (VertexId w : g.neighbors(v))
        if (is_simplicial(g, w))
            return true;
    return false;
}

// Rewrites -----------------------------------------------------------------

Graph rewire_p4_appendage(const Graph &g, VertexId a, VertexId b, VertexId c, VertexId d)
{
    for (VertexId v : {a, b, c, d})
        require_vertex(g, v, "rewire_p4_appendage");
    std::array<VertexId, 4> ids{a, b, c, d};
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw GraphError("rewire_p4_appendage: a, b, c, d must be distinct");
    if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d))
        throw GraphError("rewire_p4_appendage: a-b-c-d is not a path");
    if (g.degree(a) != 1 || g.degree(d) != 1)
        throw GraphError("rewire_p4_appendage: a and d must be pendant");
    std::array<Edge, 1> add{Edge{a, c}};
    std::array<Edge, 1> remove{Edge{c, d}};
    return with_edges(g, add, remove);
}

// Isomorphism --------------------------------------------------------------

std::uint64_t canonical_code(const Graph &g)
{
    const std::size_t n = g.order();
    if (n > kCanonicalFormBound)
        throw BoundExceeded("canonical_form limited to " + std::to_string(kCanonicalFormBound) +
                            " vertices, graph has " + std::to_string(n));
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::array<std::array<std::uint64_t, kCanonicalFormBound>, kCanonicalFormBound> bit{};
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++t) {
            bit[i][j] = std::uint64_t{1} << (pairs - 1 - t);
            bit[j][i] = bit[i][j];
        }

    const auto edges = g.edges();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do {
        std::uint64_t code = 0;
        for (auto e : edges)
            code |= bit[perm[e.u]][perm[e.v]];
        best = std::max(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Edge> canonical_form(const Graph &g)
{
    const std::size_t n = g.order();
    const std::uint64_t code = canonical_code(g);
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<Edge> out;
    std::size_t t = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++t)
            if (code >> (pairs - 1 - t) & 1)
                out.push_back({i, j});
    return out;
}

namespace {

std::string ahu_encode(const Graph &g, VertexId v, VertexId parent)
{
    std::vector<std::string> children;
    for (VertexId w : g.neighbors(v))
        if (w != parent)
            children.push_back(ahu_encode(g, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto &c : children)
        out += c;
    out += ")";
    return out;
}

}  // namespace

std::string tree_canonical_string(const Graph &g)
{
    if (!is_tree(g))
        throw GraphError("tree_canonical_string: input is not a tree");
    // Strip leaves layer by layer until one or two centres remain.
    std::vector<std::size_t> deg(g.order());
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1)
            layer.push_back(v);
    }
    std::size_t remaining = g.order();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexId> next;
        for (VertexId leaf : layer)
            for (VertexId w : g.neighbors(leaf))
                if (--deg[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (VertexId centre : layer) {
        auto code = ahu_encode(g, centre, kRemoved);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

std::string to_string(const Graph &g)
{
    std::ostringstream os;
    os << g.order() << " [";
    bool first = true;
    for (auto e : g.edges()) {
        os << (first ? "" : " ") << e.u << "-" << e.v;
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace indpoly
