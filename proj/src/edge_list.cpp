#include "indpoly/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace indpoly {

namespace {

std::vector<std::size_t> numbers(const std::string &line, std::size_t line_no)
{
    std::istringstream is(line);
    std::vector<std::size_t> out;
    std::string tok;
    while (is >> tok) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw EdgeListError("line " + std::to_string(line_no) + ": '" + tok + "' is not a natural number");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream &in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto nums = numbers(line, line_no);
        if (nums.size() != 2)
            throw EdgeListError("line " + std::to_string(line_no) + ": expected two numbers");
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            have_header = true;
            continue;
        }
        auto [u, v] = std::pair{nums[0], nums[1]};
        if (edges.size() == m)
            throw EdgeListError("line " + std::to_string(line_no) + ": more than the declared " +
                                std::to_string(m) + " edges");
        if (u >= n || v >= n)
            throw EdgeListError("line " + std::to_string(line_no) + ": endpoint out of range for " +
                                std::to_string(n) + " vertices");
        if (u == v)
            throw EdgeListError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw EdgeListError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) +
                                " " + std::to_string(v));
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (!have_header)
        throw EdgeListError("missing 'n m' header");
    if (edges.size() != m)
        throw EdgeListError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw EdgeListError("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::filesystem::path &path, const Graph &g)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write_edge_list(out, g);
}

}  // namespace indpoly
