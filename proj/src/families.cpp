#include "indpoly/families.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace indpoly {

namespace {

struct KindInfo {
    FamilyKind kind;
    std::string_view name;
    std::string_view alias;
};

constexpr std::array kKinds{
    KindInfo{FamilyKind::Complete, "complete", "K"},
    KindInfo{FamilyKind::Path, "path", "P"},
    KindInfo{FamilyKind::Cycle, "cycle", "C"},
    KindInfo{FamilyKind::Star, "star", "K1n"},
    KindInfo{FamilyKind::CompleteMultipartite, "multipartite", "complete-multipartite"},
    KindInfo{FamilyKind::Spider, "spider", "S"},
    KindInfo{FamilyKind::Centipede, "centipede", "W"},
    KindInfo{FamilyKind::TriangleChain, "triangle-chain", "delta"},
    KindInfo{FamilyKind::K2TriangleChain, "k2-triangle-chain", "k2delta"},
    KindInfo{FamilyKind::Gmn, "gmn", "G"},
};

void need(bool ok, const FamilySpec &spec, const std::string &what)
{
    if (!ok)
        throw GraphError(std::string(family_name(spec.kind)) + ": " + what);
}

std::size_t parse_natural(const std::string &token)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw GraphError("expected a natural number, got '" + token + "'");
    return value;
}

}  // namespace

std::string_view family_name(FamilyKind kind)
{
    for (const auto &info : kKinds)
        if (info.kind == kind)
            return info.name;
    return "unknown";
}

void FamilySpec::validate() const
{
    const auto &p = params;
    switch (kind) {
    case FamilyKind::CompleteMultipartite:
        need(!p.empty(), *this, "needs at least one part size");
        for (auto s : p)
            need(s >= 1, *this, "part sizes must be positive");
        return;
    case FamilyKind::Gmn:
        need(p.size() == 2, *this, "expects two parameters m n");
        need(p[0] >= 2 && p[1] >= 2, *this, "requires m >= 2 and n >= 2");
        return;
    default:
        break;
    }
    need(p.size() == 1, *this, "expects one parameter");
    const std::size_t n = p[0];
    switch (kind) {
    case FamilyKind::Complete:
    case FamilyKind::Path:
        need(n >= 1, *this, "requires n >= 1");
        break;
    case FamilyKind::Cycle:
        need(n >= 3, *this, "requires n >= 3");
        break;
    case FamilyKind::Spider:
        need(n >= 2, *this, "requires n >= 2");
        break;
    case FamilyKind::K2TriangleChain:
        need(n >= 1, *this, "requires n >= 1");
        break;
    default:
        break;
    }
}

std::string FamilySpec::name() const
{
    std::string out(family_name(kind));
    for (auto v : params)
        out += " " + std::to_string(v);
    return out;
}

FamilySpec FamilySpec::parse(const std::vector<std::string> &tokens)
{
    if (tokens.empty())
        throw GraphError("missing family name");
    for (const auto &info : kKinds) {
        if (tokens[0] != info.name && tokens[0] != info.alias)
            continue;
        FamilySpec spec{info.kind, {}};
        for (std::size_t i = 1; i < tokens.size(); ++i)
            spec.params.push_back(parse_natural(tokens[i]));
        spec.validate();
        return spec;
    }
    throw GraphError("unknown family '" + tokens[0] + "'");
}

Graph generate(const FamilySpec &spec)
{
    spec.validate();
    const auto &p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Complete: return complete(p[0]);
    case FamilyKind::Path: return path(p[0]);
    case FamilyKind::Cycle: return cycle(p[0]);
    case FamilyKind::Star: return star(p[0]);
    case FamilyKind::CompleteMultipartite: return complete_multipartite(p);
    case FamilyKind::Spider: return spider(p[0]);
    case FamilyKind::Centipede: return centipede(p[0]);
    case FamilyKind::TriangleChain: return triangle_chain(p[0]);
    case FamilyKind::K2TriangleChain: return k2_triangle_chain(p[0]);
    case FamilyKind::Gmn: return gmn(p[0], p[1]);
    }
    throw GraphError("unhandled family");
}

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v)
        edges.push_back({v - 1, v});
    return Graph(n, edges);
}

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw GraphError("cycle: requires n >= 3");
    auto edges = path(n).edges();
    edges.push_back({0, static_cast<VertexId>(n - 1)});
    return Graph(n, edges);
}

Graph star(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= n; ++v)
        edges.push_back({0, v});
    return Graph(n + 1, edges);
}

Graph complete_multipartite(const std::vector<std::size_t> &parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), parts[i], i);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < part_of.size(); ++u)
        for (VertexId v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                edges.push_back({u, v});
    return Graph(part_of.size(), edges);
}

Graph spider(std::size_t n)
{
    if (n < 2)
        throw GraphError("spider: requires n >= 2");
    std::vector<Edge> edges{{spider_vertex::hub(), spider_vertex::foot(n, 0)}};
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({spider_vertex::hub(), spider_vertex::leg(n, i)});
        edges.push_back({spider_vertex::leg(n, i), spider_vertex::foot(n, i)});
    }
    return Graph(2 * n + 2, edges);
}

Graph centipede(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({centipede_spine(n, i), centipede_tooth(n, i)});
        if (i > 1)
            edges.push_back({centipede_spine(n, i - 1), centipede_spine(n, i)});
    }
    return Graph(2 * n, edges);
}

Graph triangle_chain(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        VertexId b = 3 * i;
        edges.push_back({b, b + 1});
        edges.push_back({b, b + 2});
        edges.push_back({b + 1, b + 2});
        if (i + 1 < n)
            edges.push_back({b + 1, b + 3});
    }
    return Graph(3 * n, edges);
}

Graph k2_triangle_chain(std::size_t n)
{
    if (n < 1)
        throw GraphError("k2-triangle-chain: requires n >= 1");
    auto edges = triangle_chain(n).edges();
    const auto u1 = static_cast<VertexId>(3 * n);
    edges.push_back({u1, u1 + 1});
    edges.push_back({u1 + 1, 0});
    return Graph(3 * n + 2, edges);
}

Graph gmn(std::size_t m, std::size_t n)
{
    if (m < 2 || n < 2)
        throw GraphError("gmn: requires m >= 2 and n >= 2");
    return edge_join(centipede(m), centipede_spine(m, 2), centipede(n), centipede_spine(n, 2));
}

}  // namespace indpoly
