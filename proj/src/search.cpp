#include "indpoly/search.hpp"

#include "indpoly/enumerate.hpp"
#include "indpoly/independence.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace indpoly {

TreeTwinSearch search_tree_twins(std::size_t max_tree_order, std::size_t max_graph_order)
{
    if (max_tree_order > kMaxSearchTreeOrder)
        throw std::invalid_argument("tree order bound is " + std::to_string(kMaxSearchTreeOrder));
    if (max_graph_order > kMaxSearchGraphOrder)
        throw std::invalid_argument("graph order bound is " + std::to_string(kMaxSearchGraphOrder));

    TreeTwinSearch out;
    struct Entry {
        Graph graph;
        bool well_covered;
    };
    std::map<std::string, std::vector<Entry>> by_poly;
    for (std::size_t k = 1; k <= max_graph_order; ++k)
        for (auto &g : nonisomorphic_graphs(k)) {
            ++out.graphs_examined;
            auto key = coefficient_string(independence_polynomial(g));
            bool wc = is_well_covered(g);
            by_poly[key].push_back({std::move(g), wc});
        }

    for (std::size_t k = 1; k <= max_tree_order; ++k)
        for (const auto &t : nonisomorphic_trees(k)) {
            ++out.trees_examined;
            const bool wc_tree = is_well_covered_tree(t);
            out.well_covered_trees += wc_tree;
            const IntPoly p = tree_dp(t);
            auto it = by_poly.find(coefficient_string(p));
            if (it == by_poly.end())
                continue;
            for (const auto &entry : it->second) {
                if (wc_tree) {
                    ++out.pairs_examined;
                    if (entry.well_covered)
                        ++out.confirmations;
                    else
                        out.counterexamples.push_back({t, entry.graph, p});
                } else if (entry.well_covered) {
                    out.uncovered_tree_twins.push_back({t, entry.graph, p});
                }
            }
        }
    return out;
}

UnimodalitySweep wellcovered_unimodality_sweep(std::size_t max_order)
{
    if (max_order > kMaxSearchGraphOrder)
        throw std::invalid_argument("graph order bound is " + std::to_string(kMaxSearchGraphOrder));
    UnimodalitySweep out;
    for (std::size_t k = 1; k <= max_order; ++k)
        for (const auto &g : nonisomorphic_graphs(k)) {
            ++out.graphs_examined;
            const bool wc = is_well_covered(g);
            const bool cf = is_claw_free(g);
            if (!wc && !cf)
                continue;
            const bool unimodal = unimodality(independence_polynomial(g)).is_unimodal;
            if (wc) {
                ++out.well_covered;
                if (!unimodal)
                    out.violations.push_back(g);
            }
            if (cf) {
                ++out.claw_free;
                if (!unimodal)
                    out.claw_free_violations.push_back(g);
            }
        }
    return out;
}

}  // namespace indpoly
