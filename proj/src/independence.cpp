#include "indpoly/independence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <unordered_map>

namespace indpoly {

namespace {

// Fixed-width vertex (or edge) subset over the words of one parent graph.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    static Bits full(std::size_t n)
    {
        Bits b(n);
        for (std::size_t i = 0; i < n; ++i)
            b.set(i);
        return b;
    }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }

    bool none() const
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_and(const Bits &o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    Bits &operator&=(const Bits &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bits &operator|=(const Bits &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bits &subtract(const Bits &o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::size_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return static_cast<std::size_t>(-1);
    }

    bool operator==(const Bits &) const = default;

    std::size_t hash() const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits &b) const { return b.hash(); }
};

struct BitsPairHash {
    std::size_t operator()(const std::pair<Bits, Bits> &p) const
    {
        return p.first.hash() * 31 + p.second.hash();
    }
};

const IntPoly kOne{1};
const IntPoly kX{0, 1};
const IntPoly kXSquared{0, 0, 1};

std::vector<Bits> neighbour_bits(const Graph &g)
{
    std::vector<Bits> adj(g.order(), Bits(g.order()));
    for (VertexId v = 0; v < g.order(); ++v)
        for (VertexId w : g.neighbors(v))
            adj[v].set(w);
    return adj;
}

// Shared driver for the two vertex-deletion recursions: memoised on the
// surviving vertex set, factorised over connected components.
class VertexSubsetSolver {
public:
    using Step = std::function<IntPoly(VertexSubsetSolver &, const Bits &)>;

    VertexSubsetSolver(const Graph &g, const Options &opts, Step step)
        : n_(g.order()), adj_(neighbour_bits(g)), budget_(opts.node_budget), step_(std::move(step))
    {
    }

    IntPoly solve(const Bits &s)
    {
        if (s.none())
            return kOne;
        IntPoly out = kOne;
        for (const auto &comp : components(s))
            out *= solve_connected(comp);
        return out;
    }

    const Bits &neighbours(std::size_t v) const { return adj_[v]; }
    std::size_t vertex_count() const { return n_; }

    Bits closed_neighbourhood(std::size_t v) const
    {
        Bits b = adj_[v];
        b.set(v);
        return b;
    }

    std::vector<Bits> components(const Bits &s) const
    {
        std::vector<Bits> out;
        Bits left = s;
        while (!left.none()) {
            Bits comp(n_);
            Bits frontier(n_);
            frontier.set(left.first());
            while (!frontier.none()) {
                comp |= frontier;
                Bits next(n_);
                frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
                next &= s;
                next.subtract(comp);
                frontier = std::move(next);
            }
            left.subtract(comp);
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Highest degree inside s, lowest index on ties.
    std::size_t max_degree_vertex(const Bits &s) const
    {
        std::size_t best = s.first();
        std::size_t best_deg = 0;
        bool any = false;
        s.for_each([&](std::size_t v) {
            std::size_t d = adj_[v].count_and(s);
            if (!any || d > best_deg) {
                best = v;
                best_deg = d;
                any = true;
            }
        });
        return best;
    }

private:
    IntPoly solve_connected(const Bits &s)
    {
        if (s.count() == 1)
            return IntPoly::one_plus_x();
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;
        if (++nodes_ > budget_)
            throw BoundExceeded("recursion node budget of " + std::to_string(budget_) + " exhausted");
        IntPoly out = step_(*this, s);
        memo_.emplace(s, out);
        return out;
    }

    std::size_t n_;
    std::vector<Bits> adj_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    Step step_;
    std::unordered_map<Bits, IntPoly, BitsHash> memo_;
};

IntPoly vertex_step(VertexSubsetSolver &solver, const Bits &s)
{
    const std::size_t w = solver.max_degree_vertex(s);
    Bits without = s;
    without.reset(w);
    Bits outside = s;
    outside.subtract(solver.closed_neighbourhood(w));
    return solver.solve(without) + kX * solver.solve(outside);
}

IntPoly clique_formula(VertexSubsetSolver &solver, const Bits &s, const std::vector<std::size_t> &clique)
{
    Bits rest = s;
    for (auto v : clique)
        rest.reset(v);
    IntPoly sum;
    for (auto v : clique) {
        Bits outside = s;
        outside.subtract(solver.closed_neighbourhood(v));
        sum += solver.solve(outside);
    }
    return solver.solve(rest) + kX * sum;
}

IntPoly clique_step(VertexSubsetSolver &solver, const Bits &s)
{
    const std::size_t seed = solver.max_degree_vertex(s);
    std::vector<std::size_t> clique{seed};
    Bits candidates = solver.neighbours(seed);
    candidates &= s;
    while (!candidates.none()) {
        // Grow by the candidate adjacent to the most other candidates.
        std::size_t pick = candidates.first();
        std::size_t best = 0;
        bool any = false;
        candidates.for_each([&](std::size_t v) {
            std::size_t d = solver.neighbours(v).count_and(candidates);
            if (!any || d > best) {
                pick = v;
                best = d;
                any = true;
            }
        });
        clique.push_back(pick);
        candidates &= solver.neighbours(pick);
    }
    return clique_formula(solver, s, clique);
}

// Edge-deletion recursion keeps both a vertex set and an edge set.
class EdgeSolver {
public:
    EdgeSolver(const Graph &g, const Options &opts)
        : n_(g.order()), edges_(g.edges()), incident_(g.order()), budget_(opts.node_budget)
    {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incident_[edges_[i].u].push_back(i);
            incident_[edges_[i].v].push_back(i);
        }
    }

    std::size_t edge_index(VertexId u, VertexId v) const
    {
        Edge e{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        return static_cast<std::size_t>(it - edges_.begin());
    }

    IntPoly solve(const Bits &verts, Bits es)
    {
        // Drop edges that lost an endpoint so memo keys are canonical.
        es.for_each([&](std::size_t i) {
            if (!verts.test(edges_[i].u) || !verts.test(edges_[i].v))
                es.reset(i);
        });
        IntPoly out = kOne;
        Bits left = verts;
        while (!left.none()) {
            Bits comp(n_);
            std::vector<std::size_t> stack{left.first()};
            comp.set(stack.back());
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto i : incident_[v]) {
                    if (!es.test(i))
                        continue;
                    auto w = edges_[i].u == v ? edges_[i].v : edges_[i].u;
                    if (!comp.test(w)) {
                        comp.set(w);
                        stack.push_back(w);
                    }
                }
            }
            left.subtract(comp);
            if (comp.count() == 1) {
                out *= IntPoly::one_plus_x();
                continue;
            }
            Bits comp_edges(edges_.size());
            comp.for_each([&](std::size_t v) {
                for (auto i : incident_[v])
                    if (es.test(i))
                        comp_edges.set(i);
            });
            out *= solve_connected(comp, comp_edges);
        }
        return out;
    }

    IntPoly expand(const Bits &verts, const Bits &es, std::size_t edge)
    {
        Bits fewer = es;
        fewer.reset(edge);
        Bits removed(n_);
        for (auto end : {edges_[edge].u, edges_[edge].v})
            for (auto i : incident_[end])
                if (es.test(i)) {
                    removed.set(edges_[i].u);
                    removed.set(edges_[i].v);
                }
        Bits rest = verts;
        rest.subtract(removed);
        return solve(verts, fewer) - kXSquared * solve(rest, es);
    }

    std::size_t edge_count() const { return edges_.size(); }
    std::size_t vertex_count() const { return n_; }

private:
    IntPoly solve_connected(const Bits &verts, const Bits &es)
    {
        auto key = std::make_pair(verts, es);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        if (++nodes_ > budget_)
            throw BoundExceeded("recursion node budget of " + std::to_string(budget_) + " exhausted");

        // Edge at a vertex of least positive degree, lowest indices on ties.
        std::size_t chosen = 0, best_deg = 0;
        bool any = false;
        verts.for_each([&](std::size_t v) {
            std::size_t d = 0, first_edge = 0;
            for (auto i : incident_[v])
                if (es.test(i) && d++ == 0)
                    first_edge = i;
            if (d > 0 && (!any || d < best_deg)) {
                any = true;
                best_deg = d;
                chosen = first_edge;
            }
        });
        IntPoly out = expand(verts, es, chosen);
        memo_.emplace(std::move(key), out);
        return out;
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::pair<Bits, Bits>, IntPoly, BitsPairHash> memo_;
};

void count_stable_sets(const std::vector<std::uint64_t> &adj, std::uint64_t candidates, std::size_t size,
                       std::vector<std::uint64_t> &counts)
{
    ++counts[size];
    while (candidates) {
        auto v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        count_stable_sets(adj, candidates & ~adj[static_cast<std::size_t>(v)], size + 1, counts);
    }
}

BigInt choose2(std::size_t n)
{
    return BigInt(n) * (n > 0 ? n - 1 : 0) / 2;
}

}  // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::Oracle: return "oracle";
    case Method::VertexRecursion: return "vertex-recursion";
    case Method::CliqueRecursion: return "clique-recursion";
    case Method::EdgeRecursion: return "edge-recursion";
    case Method::TreeDP: return "tree-dp";
    case Method::Auto: return "auto";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (auto m : {Method::Oracle, Method::VertexRecursion, Method::CliqueRecursion, Method::EdgeRecursion,
                   Method::TreeDP, Method::Auto})
        if (method_name(m) == name)
            return m;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

IntPoly oracle_indpoly(const Graph &g, const Options &opts)
{
    if (g.order() > opts.oracle_bound || g.order() > 64)
        throw BoundExceeded("oracle limited to " + std::to_string(opts.oracle_bound) + " vertices, graph has " +
                            std::to_string(g.order()));
    const auto adj = g.adjacency_masks();
    const std::size_t n = g.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> counts(n + 1, 0);

    // Each stable set is reached once: candidates only ever hold higher indices.
    std::vector<std::uint64_t> above(n);
    for (std::size_t v = 0; v < n; ++v)
        above[v] = adj[v] | ((std::uint64_t{2} << v) - 1);
    count_stable_sets(above, all, 0, counts);

    std::vector<BigInt> coeffs(counts.begin(), counts.end());
    return IntPoly(std::move(coeffs));
}

IntPoly vertex_recursion(const Graph &g, const Options &opts)
{
    VertexSubsetSolver solver(g, opts, vertex_step);
    return solver.solve(Bits::full(g.order()));
}

IntPoly clique_recursion(const Graph &g, const Options &opts)
{
    VertexSubsetSolver solver(g, opts, clique_step);
    return solver.solve(Bits::full(g.order()));
}

IntPoly clique_recursion(const Graph &g, std::span<const VertexId> clique, const Options &opts)
{
    if (clique.empty())
        throw GraphError("clique_recursion: clique must be nonempty");
    for (auto v : clique)
        if (!g.contains(v))
            throw GraphError("clique_recursion: vertex " + std::to_string(v) + " out of range");
    if (!is_clique(g, clique))
        throw GraphError("clique_recursion: given vertices do not induce a complete subgraph");
    VertexSubsetSolver solver(g, opts, clique_step);
    return clique_formula(solver, Bits::full(g.order()), std::vector<std::size_t>(clique.begin(), clique.end()));
}

IntPoly edge_recursion(const Graph &g, const Options &opts)
{
    EdgeSolver solver(g, opts);
    return solver.solve(Bits::full(g.order()), Bits::full(solver.edge_count()));
}

IntPoly edge_recursion(const Graph &g, VertexId u, VertexId v, const Options &opts)
{
    if (!g.contains(u) || !g.contains(v) || u == v || !g.adjacent(u, v))
        throw GraphError("edge_recursion: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    EdgeSolver solver(g, opts);
    return solver.expand(Bits::full(g.order()), Bits::full(solver.edge_count()), solver.edge_index(u, v));
}

IntPoly tree_dp(const Graph &g)
{
    if (!is_forest(g))
        throw GraphError("tree_dp: input has a cycle");
    const std::size_t n = g.order();
    std::vector<IntPoly> with(n), without(n);
    std::vector<VertexId> parent(n, kRemoved);
    std::vector<bool> seen(n, false);
    IntPoly total = kOne;

    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<VertexId> order{root};
        seen[root] = true;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (VertexId w : g.neighbors(order[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = order[i];
                    order.push_back(w);
                }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            VertexId v = *it;
            with[v] = kX;
            without[v] = kOne;
            for (VertexId w : g.neighbors(v))
                if (w != parent[v]) {
                    with[v] *= without[w];
                    without[v] *= with[w] + without[w];
                }
        }
        total *= with[root] + without[root];
    }
    return total;
}

IntPoly independence_polynomial(const Graph &g, Method method, const Options &opts)
{
    IntPoly p;
    switch (method) {
    case Method::Oracle: p = oracle_indpoly(g, opts); break;
    case Method::VertexRecursion: p = vertex_recursion(g, opts); break;
    case Method::CliqueRecursion: p = clique_recursion(g, opts); break;
    case Method::EdgeRecursion: p = edge_recursion(g, opts); break;
    case Method::TreeDP: p = tree_dp(g); break;
    case Method::Auto: p = is_forest(g) ? tree_dp(g) : vertex_recursion(g, opts); break;
    }
    const std::size_t n = g.order();
    if (p[0] != 1 || p[1] != n || p[2] != choose2(n) - g.size())
        throw std::logic_error("independence polynomial " + to_string(p) + " violates s0 = 1, s1 = " +
                               std::to_string(n) + ", s2 = C(n,2) - " + std::to_string(g.size()));
    return p;
}

IntPoly edge_join_formula(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2)
{
    if (!g1.contains(v1) || !g2.contains(v2))
        throw GraphError("edge_join_formula: vertex out of range");
    auto rest1 = delete_closed_neighborhood(g1, v1).graph;
    auto rest2 = delete_closed_neighborhood(g2, v2).graph;
    return independence_polynomial(g1) * independence_polynomial(g2) -
           kXSquared * independence_polynomial(rest1) * independence_polynomial(rest2);
}

}  // namespace indpoly
