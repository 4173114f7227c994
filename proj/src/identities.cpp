#include "indpoly/identities.hpp"

#include "indpoly/families.hpp"
#include "indpoly/independence.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace indpoly {

namespace {

const IntPoly kOne{1};
const IntPoly kX{0, 1};
const IntPoly kXSquared{0, 0, 1};
const IntPoly kOnePlusX{1, 1};
const IntPoly kOnePlus2X{1, 2};

std::vector<std::int64_t> params_of(std::initializer_list<std::size_t> values)
{
    return {values.begin(), values.end()};
}

CheckReport compare(std::string name, std::vector<std::int64_t> params, IntPoly lhs, IntPoly rhs)
{
    CheckReport r{std::move(name), std::move(params), Status::Pass, std::move(lhs), std::move(rhs), {}};
    if (r.lhs != r.rhs) {
        r.status = Status::Fail;
        r.detail = "polynomials differ";
    }
    return r;
}

// Folds an extra predicate into a report, keeping the first failure message.
void require(CheckReport &r, bool ok, const std::string &what)
{
    if (ok)
        return;
    if (r.status != Status::Fail) {
        r.status = Status::Fail;
        r.detail = what;
    } else {
        r.detail += "; " + what;
    }
}

void note(CheckReport &r, const std::string &text)
{
    if (r.status == Status::Fail)
        return;
    r.detail += (r.detail.empty() ? "" : "; ") + text;
}

IntPoly poly_of(const Graph &g)
{
    return independence_polynomial(g, g.order() <= 16 ? Method::Oracle : Method::Auto);
}

bool claw_free_unimodal(const Graph &g, const IntPoly &p)
{
    return is_claw_free(g) && unimodality(p).is_unimodal;
}

std::string mode_text(const UnimodalityReport &u)
{
    if (u.mode_lo == u.mode_hi)
        return "mode " + std::to_string(u.mode_lo);
    return "modes " + std::to_string(u.mode_lo) + ".." + std::to_string(u.mode_hi);
}

Graph with_extra_edges(const Graph &g, std::initializer_list<Edge> add)
{
    std::vector<Edge> edges(add.begin(), add.end());
    return with_edges(g, edges, {});
}

std::vector<VertexId> simplicial_vertices(const Graph &g)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (is_simplicial(g, v))
            out.push_back(v);
    return out;
}

}  // namespace

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Finding: return "FINDING";
    }
    return "UNKNOWN";
}

// Fibonacci, paths and cycles ----------------------------------------------

CheckReport fibonacci_binomial_check(std::size_t n)
{
    return compare("fibonacci-binomial", params_of({n}), fibonacci_poly(n), fibonacci_binomial_form(n));
}

CheckReport path_fibonacci_check(std::size_t n)
{
    auto r = compare("path-fibonacci", params_of({n}), independence_polynomial(path(n)), fibonacci_poly(n + 1));
    require(r, fibonacci_poly(n + 1) == fibonacci_binomial_form(n + 1), "fibonacci closed form differs");
    return r;
}

CheckReport cycle_fibonacci_check(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_fibonacci_check: n must be at least 3");
    IntPoly rhs = fibonacci_poly(n - 1) + IntPoly{0, 2} * fibonacci_poly(n - 2);
    return compare("cycle-fibonacci", params_of({n}), independence_polynomial(cycle(n)), rhs);
}

CheckReport complete_graph_check(std::size_t n)
{
    return compare("complete-graph", params_of({n}), independence_polynomial(complete(n)),
                   IntPoly{1, static_cast<long long>(n)});
}

CheckReport complete_multipartite_check(std::size_t part, std::size_t count)
{
    std::vector<std::size_t> parts(count, part);
    IntPoly rhs = BigInt(count) * pow(kOnePlusX, part) - IntPoly::constant(BigInt(count) - 1);
    return compare("complete-multipartite", params_of({part, count}),
                   independence_polynomial(complete_multipartite(parts)), rhs);
}

// Spiders ------------------------------------------------------------------

IntPoly spider_quotient(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("spider: n must be at least 2");
    std::vector<BigInt> a(n + 1);
    a[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        a[k] = binomial(n, k) * (BigInt(1) << k) + binomial(n - 1, k - 1);
    return IntPoly(std::move(a));
}

IntPoly spider_closed_form(std::size_t n)
{
    return kOnePlusX * spider_quotient(n);
}

IntPoly spider_product_form(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("spider: n must be at least 2");
    return kOnePlusX * pow(kOnePlus2X, n) + kX * pow(kOnePlusX, n);
}

std::size_t spider_mode(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("spider: n must be at least 2");
    return 1 + (n - 1) % 3 + 2 * ((n + 2) / 3 - 1);
}

std::size_t spider_quotient_mode(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("spider: n must be at least 2");
    return n - 1 - (n - 2) / 3;
}

CheckReport spider_check(std::size_t n, std::size_t dp_limit)
{
    const IntPoly closed = spider_closed_form(n);
    const bool by_dp = n <= dp_limit;
    auto r = compare("spider-closed-form", params_of({n}), closed,
                     by_dp ? tree_dp(spider(n)) : spider_product_form(n));
    if (by_dp)
        require(r, closed == spider_product_form(n), "product form differs");

    const auto u = unimodality(closed);
    const std::size_t predicted = spider_mode(n);
    require(r, u.is_unimodal, "not unimodal");
    require(r, u.unique_mode, "mode not unique");
    require(r, u.mode_lo == predicted,
            "mode " + std::to_string(u.mode_lo) + " but formula gives " + std::to_string(predicted));
    const auto q = unimodality(spider_quotient(n));
    require(r, q.is_unimodal && q.mode_lo <= spider_quotient_mode(n) && spider_quotient_mode(n) <= q.mode_hi,
            "quotient mode differs");
    require(r, degree_one_product_mode(spider_quotient(n), 1, 1) == predicted,
            "degree-one mode rule disagrees");
    note(r, "unique mode " + std::to_string(predicted) + (by_dp ? ", tree dp" : ", product form"));
    return r;
}

// Triangle chains and centipedes ---------------------------------------------

IntPoly triangle_chain_recurrence(std::size_t n)
{
    IntPoly prev = kOne, cur{1, 3};
    if (n == 0)
        return prev;
    const IntPoly one_plus_3x{1, 3};
    for (std::size_t i = 2; i <= n; ++i) {
        IntPoly next = one_plus_3x * cur - kXSquared * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

void chain_structure(CheckReport &r, const Graph &g, std::size_t n, std::size_t alpha)
{
    if (n <= 12)
        require(r, is_claw_free(g), "not claw-free");
    if (n <= 6) {
        auto wc = well_covered_verdict(g);
        require(r, wc.well_covered, "not well-covered");
        require(r, wc.max_size == alpha, "stability number " + std::to_string(wc.max_size));
    }
    require(r, unimodality(r.lhs).is_unimodal, "not unimodal");
}

}  // namespace

CheckReport triangle_chain_check(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("triangle_chain_check: n must be at least 2");
    const Graph g = triangle_chain(n);
    auto r = compare("triangle-chain-recurrence", params_of({n}), independence_polynomial(g),
                     triangle_chain_recurrence(n));
    chain_structure(r, g, n, n);
    return r;
}

CheckReport k2_triangle_chain_check(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("k2_triangle_chain_check: n must be at least 1");
    const Graph g = k2_triangle_chain(n);
    IntPoly rhs = kOnePlus2X * triangle_chain_recurrence(n) - kXSquared * triangle_chain_recurrence(n - 1);
    auto r = compare("k2-triangle-chain-formula", params_of({n}), independence_polynomial(g), rhs);
    chain_structure(r, g, n, n + 1);
    return r;
}

IntPoly centipede_recurrence(std::size_t n)
{
    IntPoly prev = kOne, cur = kOnePlus2X;
    if (n == 0)
        return prev;
    for (std::size_t i = 2; i <= n; ++i) {
        IntPoly next = kOnePlusX * (cur + kX * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Graph rewire_centipede_chain(const Graph &g, const std::vector<VertexId> &spine, const std::vector<VertexId> &teeth)
{
    if (spine.size() != teeth.size())
        throw GraphError("rewire_centipede_chain: spine and teeth differ in length");
    Graph out = g;
    for (std::size_t i = 0; i + 1 < spine.size(); i += 2)
        out = rewire_p4_appendage(out, teeth[i], spine[i], spine[i + 1], teeth[i + 1]);
    return out;
}

std::vector<CheckReport> centipede_checks(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("centipede_checks: n must be at least 2");
    const Graph w = centipede(n);
    const IntPoly direct = tree_dp(w);
    std::vector<CheckReport> out;

    const std::size_t half = n / 2;
    if (n % 2 == 0)
        out.push_back(compare("centipede-even-factorization", params_of({n}), direct,
                              pow(kOnePlusX, half) * independence_polynomial(triangle_chain(half))));
    else
        out.push_back(compare("centipede-odd-factorization", params_of({n}), direct,
                              pow(kOnePlusX, half) * independence_polynomial(k2_triangle_chain(half))));

    out.push_back(compare("centipede-recurrence", params_of({n}), direct, centipede_recurrence(n)));

    std::vector<VertexId> spine, teeth;
    for (std::size_t i = 1; i <= n; ++i) {
        spine.push_back(centipede_spine(n, i));
        teeth.push_back(centipede_tooth(n, i));
    }
    const Graph rewired = rewire_centipede_chain(w, spine, teeth);
    auto eq = compare("centipede-claw-free-equivalent", params_of({n}), direct, independence_polynomial(rewired));
    require(eq, is_claw_free(rewired), "rewired centipede has a claw");
    out.push_back(std::move(eq));

    auto u = unimodality(direct);
    auto uni = compare("centipede-unimodal", params_of({n}), direct, direct);
    require(uni, u.is_unimodal, "not unimodal");
    note(uni, mode_text(u));
    out.push_back(std::move(uni));
    return out;
}

std::size_t centipede_mode_offset(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("centipede_mode_offset: n must be at least 2");
    if (n <= 6)
        return 1 + n / 5;
    return centipede_mode_offset(2 + (n - 2) % 5) + 2 * ((n - 2) / 5);
}

CheckReport centipede_mode_conjecture(std::size_t n)
{
    const IntPoly p = tree_dp(centipede(n));
    const std::size_t predicted = n - centipede_mode_offset(n);
    const auto u = unimodality(p);
    CheckReport r{"centipede-mode-conjecture", params_of({n}), Status::Pass, p, p, {}};
    const bool hit = u.mode_lo <= predicted && predicted <= u.mode_hi;
    r.status = hit ? Status::Pass : Status::Finding;
    r.detail = "predicted " + std::to_string(predicted) + ", " + mode_text(u);
    return r;
}

// Rewiring a pendant P4 --------------------------------------------------------

CheckReport p4_rewiring_check(const Graph &g, VertexId v)
{
    if (!g.contains(v))
        throw GraphError("p4_rewiring_check: vertex out of range");
    // P4 occupies 0..3 as a-b-c-d.
    const Graph l1 = edge_join(path(4), 1, g, v);
    const Graph l2 = rewire_p4_appendage(l1, 0, 1, 2, 3);
    auto r = compare("p4-rewiring", params_of({g.order(), v}), poly_of(l1), poly_of(l2));
    if (is_claw_free(g) && is_simplicial(g, v)) {
        require(r, claw_free_unimodal(l2, r.rhs), "rewired graph not claw-free and unimodal");
        note(r, "claw-free transfer checked");
    }
    return r;
}

CheckReport p4_rewiring_two_sided_check(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2)
{
    if (!g1.contains(v1) || !g2.contains(v2))
        throw GraphError("p4_rewiring_two_sided_check: vertex out of range");
    const auto n1 = static_cast<VertexId>(g1.order());
    const VertexId a = n1, b = n1 + 1, c = n1 + 2, d = n1 + 3;
    const Graph three = edge_join(g1, v1, path(4), 1);
    const Graph g = edge_join(three, c, g2, v2);
    const Graph h = rewire_p4_appendage(g, a, b, c, d);
    auto r = compare("p4-rewiring-two-sided", params_of({g1.order(), v1, g2.order(), v2}), poly_of(g), poly_of(h));
    if (is_claw_free(g1) && is_claw_free(g2) && is_simplicial(g1, v1) && is_simplicial(g2, v2)) {
        require(r, claw_free_unimodal(h, r.rhs), "rewired graph not claw-free and unimodal");
        note(r, "claw-free transfer checked");
    }
    return r;
}

namespace {

struct Rooted {
    Graph g;
    VertexId v;
};

// Random graph, tree or line graph; line graphs are rooted at a simplicial
// vertex when they have one.
Rooted random_rooted(Rng &rng, std::size_t kind, std::size_t max_order)
{
    Graph g;
    const std::size_t n = 1 + uniform_below(rng, max_order);
    switch (kind % 3) {
    case 0: g = random_graph(n, 1 + uniform_below(rng, 3), 4, rng); break;
    case 1: g = random_tree(n, rng); break;
    default: g = random_line_graph(max_order, rng); break;
    }
    if (g.empty())
        g = Graph(1, {});
    auto simp = simplicial_vertices(g);
    if (kind % 3 == 2 && !simp.empty())
        return {g, simp[uniform_below(rng, simp.size())]};
    return {g, static_cast<VertexId>(uniform_below(rng, g.order()))};
}

}  // namespace

std::vector<CheckReport> p4_rewiring_random_suite(std::uint64_t seed, std::size_t count)
{
    Rng rng(seed);
    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto first = random_rooted(rng, i, 9);
        if ((i / 3) % 2 == 0) {
            out.push_back(p4_rewiring_check(first.g, first.v));
        } else {
            auto second = random_rooted(rng, i + 1, 9);
            out.push_back(p4_rewiring_two_sided_check(first.g, first.v, second.g, second.v));
        }
        out.back().params.insert(out.back().params.begin(), static_cast<std::int64_t>(i));
    }
    return out;
}

// Edge-join ------------------------------------------------------------------

CheckReport edge_join_check(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2)
{
    const Graph g = edge_join(g1, v1, g2, v2);
    auto r = compare("edge-join-formula", params_of({g1.order(), v1, g2.order(), v2}), poly_of(g),
                     edge_join_formula(g1, v1, g2, v2));
    if (is_well_covered(g1) && is_well_covered(g2) && is_join_admissible(g1, v1) && is_join_admissible(g2, v2)) {
        auto wc = well_covered_verdict(g);
        require(r, wc.well_covered, "join of admissible well-covered graphs is not well-covered");
        require(r, wc.max_size == stability_number(g1) + stability_number(g2), "stability number not additive");
        note(r, "well-covered join checked");
    }
    return r;
}

namespace {

// Every vertex x gains a private triangle x-y-z.
Graph triangle_corona(const Graph &g)
{
    const auto n = static_cast<VertexId>(g.order());
    auto edges = g.edges();
    for (VertexId x = 0; x < n; ++x) {
        VertexId y = n + 2 * x, z = n + 2 * x + 1;
        edges.insert(edges.end(), {Edge{x, y}, Edge{x, z}, Edge{y, z}});
    }
    return Graph(3 * g.order(), edges);
}

Rooted random_admissible_well_covered(Rng &rng)
{
    for (int attempt = 0; attempt < 200; ++attempt) {
        const std::size_t n = 1 + uniform_below(rng, 9);
        Graph g = random_graph(n, 1 + uniform_below(rng, 3), 4, rng);
        if (!is_well_covered(g))
            continue;
        std::vector<VertexId> ok;
        for (VertexId v = 0; v < g.order(); ++v)
            if (is_join_admissible(g, v))
                ok.push_back(v);
        if (!ok.empty())
            return {g, ok[uniform_below(rng, ok.size())]};
    }
    Graph g = triangle_corona(random_graph(1 + uniform_below(rng, 3), 1, 2, rng));
    return {g, static_cast<VertexId>(g.order() - 1)};
}

}  // namespace

std::vector<CheckReport> edge_join_random_suite(std::uint64_t seed, std::size_t well_covered_pairs,
                                                std::size_t arbitrary_pairs)
{
    Rng rng(seed);
    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < well_covered_pairs; ++i) {
        auto a = random_admissible_well_covered(rng);
        auto b = random_admissible_well_covered(rng);
        out.push_back(edge_join_check(a.g, a.v, b.g, b.v));
    }
    for (std::size_t i = 0; i < arbitrary_pairs; ++i) {
        auto a = random_rooted(rng, i, 9);
        auto b = random_rooted(rng, i + 1, 9);
        out.push_back(edge_join_check(a.g, a.v, b.g, b.v));
    }
    return out;
}

// Centipede edge-joins -----------------------------------------------------------

Graph claw_free_gadget()
{
    // 0,1,2 isolated; 3-4; triangle {5,6,7}; K4 {8,9,10,11}; bridge 6-8.
    return Graph(12, {{3, 4},
                      {5, 6},
                      {5, 7},
                      {6, 7},
                      {8, 9},
                      {8, 10},
                      {8, 11},
                      {9, 10},
                      {9, 11},
                      {10, 11},
                      {6, 8}});
}

namespace {

void hang_centipede(std::vector<Edge> &edges, std::size_t &next, VertexId anchor, std::size_t length,
                    std::vector<VertexId> &spine, std::vector<VertexId> &teeth)
{
    spine.clear();
    teeth.clear();
    for (std::size_t i = 0; i < length; ++i) {
        auto s = static_cast<VertexId>(next++);
        auto t = static_cast<VertexId>(next++);
        edges.push_back({s, t});
        edges.push_back({i == 0 ? anchor : spine.back(), s});
        spine.push_back(s);
        teeth.push_back(t);
    }
}

// Gadget with W_{far} hanging from the triangle tip and W_{near} from the
// square tip, both rewired into triangle chains.
Graph gadget_with_tails(std::size_t far, std::size_t near)
{
    const Graph q = claw_free_gadget();
    auto edges = q.edges();
    std::size_t next = q.order();
    std::vector<VertexId> far_spine, far_teeth, near_spine, near_teeth;
    hang_centipede(edges, next, kGadgetTriangleTip, far, far_spine, far_teeth);
    hang_centipede(edges, next, kGadgetSquareTip, near, near_spine, near_teeth);
    Graph g(next, edges);
    g = rewire_centipede_chain(g, far_spine, far_teeth);
    return rewire_centipede_chain(g, near_spine, near_teeth);
}

// Two triangles joined by two disjoint edges.
Graph triangle_pair()
{
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}});
}

Graph prism()
{
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

Graph gmn_claw_free_equivalent(std::size_t m, std::size_t n)
{
    if (m < 2 || n < 2)
        throw std::invalid_argument("gmn: requires m >= 2 and n >= 2");
    if (n >= 4)
        return gadget_with_tails(n - 4, m - 2);
    if (m >= 4)
        return gadget_with_tails(m - 4, n - 2);
    const Graph k1(1, {});
    const Graph k2(2, {{0, 1}});
    if (m == 2 && n == 2) {
        const Graph g = gmn(2, 2);
        return rewire_p4_appendage(g, centipede_tooth(2, 2), gmn_left_join(2), gmn_right_join(2),
                                   static_cast<VertexId>(4 + centipede_tooth(2, 2)));
    }
    if (m == 3 && n == 3) {
        std::array parts{k1, k1, k2, k2, prism()};
        return disjoint_union(parts);
    }
    std::array parts{k1, k1, k2, triangle_pair()};
    return disjoint_union(parts);
}

CheckReport g24_attach_check(const Graph &h, VertexId w)
{
    const Graph g = edge_join(gmn(2, 4), kG24FarSpine, h, w);
    const Graph l = edge_join(claw_free_gadget(), kGadgetTriangleTip, h, w);
    auto r = compare("g24-attach-equivalent", params_of({h.order(), w}), poly_of(g), poly_of(l));
    if (is_claw_free(h) && is_simplicial(h, w)) {
        require(r, claw_free_unimodal(l, r.rhs), "equivalent not claw-free and unimodal");
        note(r, "claw-free");
    }
    return r;
}

CheckReport g24_bridge_check(const Graph &h1, VertexId w1, const Graph &h2, VertexId w2)
{
    const auto n1 = static_cast<VertexId>(h1.order());
    const Graph g = with_extra_edges(disjoint_union(std::array{h1, gmn(2, 4), h2}),
                                     {Edge{w1, n1 + kG24FarSpine}, Edge{n1 + kG24NearSpine, n1 + 12 + w2}});
    const Graph l =
        with_extra_edges(disjoint_union(std::array{h1, claw_free_gadget(), h2}),
                         {Edge{w1, n1 + kGadgetTriangleTip}, Edge{n1 + kGadgetSquareTip, n1 + 12 + w2}});
    auto r = compare("g24-bridge-equivalent", params_of({h1.order(), w1, h2.order(), w2}), poly_of(g), poly_of(l));
    if (is_claw_free(h1) && is_claw_free(h2) && is_simplicial(h1, w1) && is_simplicial(h2, w2)) {
        require(r, claw_free_unimodal(l, r.rhs), "equivalent not claw-free and unimodal");
        note(r, "claw-free");
    }
    return r;
}

std::vector<CheckReport> g24_checks()
{
    std::vector<CheckReport> out;
    const Graph g24 = gmn(2, 4);
    const IntPoly direct = oracle_indpoly(g24);
    auto eq = compare("g24-claw-free-equivalent", {}, direct, oracle_indpoly(claw_free_gadget()));
    require(eq, is_claw_free(claw_free_gadget()), "gadget has a claw");
    require(eq, unimodality(direct).is_unimodal, "not unimodal");
    out.push_back(std::move(eq));
    out.push_back(compare("g24-factored", {}, direct,
                          pow(kOnePlusX, 3) * kOnePlus2X * IntPoly{1, 7, 11}));

    const std::vector<Rooted> small{
        {Graph(1, {}), 0},       {complete(2), 0},       {complete(3), 0},    {path(3), 0},
        {path(3), 1},            {cycle(4), 0},          {star(3), 0},        {centipede(3), 0},
        {triangle_chain(2), 2},  {k2_triangle_chain(1), 3},
    };
    for (const auto &h : small)
        out.push_back(g24_attach_check(h.g, h.v));
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); j += 3)
            out.push_back(g24_bridge_check(small[i].g, small[i].v, small[j].g, small[j].v));
    return out;
}

CheckReport gmn_check(std::size_t m, std::size_t n)
{
    const Graph g = gmn(m, n);
    const Graph l = gmn_claw_free_equivalent(m, n);
    auto r = compare("gmn-claw-free-equivalent", params_of({m, n}), tree_dp(g), independence_polynomial(l));
    require(r, is_claw_free(l), "equivalent has a claw");
    const auto u = unimodality(r.lhs);
    require(r, u.is_unimodal, "not unimodal");
    note(r, mode_text(u));
    return r;
}

// Equal polynomials, different well-coveredness -------------------------------

Graph fork_tree()
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

Graph square_and_point()
{
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph two_column_graph()
{
    return Graph(6, {{0, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {1, 5}, {1, 3}, {2, 4}});
}

Graph double_apex_path()
{
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}});
}

CheckReport equal_polynomial_pair_check(const std::string &name, const Graph &not_covered, const Graph &covered)
{
    auto r = compare(name, params_of({not_covered.order(), covered.order()}), poly_of(not_covered), poly_of(covered));
    require(r, !is_well_covered(not_covered), "first graph is well-covered");
    require(r, is_well_covered(covered), "second graph is not well-covered");
    return r;
}

ZykovPair zykov_pair(const Graph &l1, VertexId v1, const Graph &l2, VertexId v2)
{
    if (!is_well_covered(l1) || !is_well_covered(l2))
        throw std::invalid_argument("zykov_pair: both seeds must be well-covered");
    const Graph l = edge_join(l1, v1, l2, v2);
    const auto wc = well_covered_verdict(l);
    if (!wc.well_covered)
        throw std::invalid_argument("zykov_pair: the edge-join of the seeds is not well-covered");
    if (wc.max_size != stability_number(l1) + stability_number(l2))
        throw std::invalid_argument("zykov_pair: stability number of the join is not additive");

    const Graph h1 = delete_closed_neighborhood(l1, v1).graph;
    const Graph h2 = delete_closed_neighborhood(l2, v2).graph;
    const Graph k1(1, {});
    const Graph k2 = complete(2);
    ZykovPair out;
    out.covered = zykov_sum(l, disjoint_union(std::array{h1, h2, k1, k1}));
    out.not_covered = zykov_sum(disjoint_union(l1, l2), disjoint_union(std::array{h1, h2, k2}));
    out.report = compare("zykov-pair", params_of({l1.order(), v1, l2.order(), v2}), poly_of(out.covered),
                         poly_of(out.not_covered));
    require(out.report, is_well_covered(out.covered), "first graph is not well-covered");
    require(out.report, !is_well_covered(out.not_covered), "second graph is well-covered");
    note(out.report, std::to_string(out.covered.order()) + " and " + std::to_string(out.not_covered.order()) +
                         " vertices");
    return out;
}

std::vector<SeedPair> zykov_seed_pairs()
{
    return {
        {"K2,K2", complete(2), 0, complete(2), 0},
        {"K3,K2", complete(3), 0, complete(2), 1},
        {"K3,K3", complete(3), 0, complete(3), 0},
        {"P4,K2", path(4), 1, complete(2), 0},
    };
}

std::vector<CheckReport> zykov_pair_checks()
{
    std::vector<CheckReport> out;
    for (const auto &seed : zykov_seed_pairs()) {
        auto pair = zykov_pair(seed.l1, seed.v1, seed.l2, seed.v2);
        pair.report.detail = seed.label + (pair.report.detail.empty() ? "" : "; " + pair.report.detail);
        out.push_back(std::move(pair.report));
    }
    out.push_back(equal_polynomial_pair_check("equal-polynomial-tree-pair", fork_tree(), square_and_point()));
    out.push_back(equal_polynomial_pair_check("equal-polynomial-dense-pair", two_column_graph(), double_apex_path()));
    return out;
}

}  // namespace indpoly
