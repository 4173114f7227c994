#include "fixtures.hpp"
#include "oracles.hpp"

#include "indpoly/families.hpp"
#include "indpoly/identities.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/report.hpp"

#include <doctest.h>

#include <algorithm>

using namespace indpoly;

namespace {

void all_pass(const std::vector<CheckReport> &reports)
{
    CHECK_FALSE(reports.empty());
    for (const auto &r : reports)
        CHECK_MESSAGE(r.status == Status::Pass, render_text(r));
}

}  // namespace

TEST_CASE("fibonacci and family identities")
{
    for (std::size_t n = 0; n <= 25; ++n)
        CHECK(fibonacci_binomial_check(n).status == Status::Pass);
    for (std::size_t n = 1; n <= 20; ++n)
        CHECK(path_fibonacci_check(n).status == Status::Pass);
    for (std::size_t n = 3; n <= 20; ++n)
        CHECK(cycle_fibonacci_check(n).status == Status::Pass);
    CHECK_THROWS_AS(cycle_fibonacci_check(2), std::invalid_argument);
    CHECK(complete_graph_check(9).status == Status::Pass);
    CHECK(complete_multipartite_check(3, 4).status == Status::Pass);
}

TEST_CASE("spider closed form")
{
    CHECK(spider_closed_form(2) == tree_dp(spider(2)));
    CHECK(spider_closed_form(5) == spider_product_form(5));
    CHECK_THROWS_AS(spider_closed_form(1), std::invalid_argument);
    for (std::size_t n = 2; n <= 60; ++n) {
        const auto r = spider_check(n);
        CHECK_MESSAGE(r.status == Status::Pass, render_text(r));
    }
}

TEST_CASE("spider mode formula against the coefficients")
{
    for (std::size_t n = 2; n <= 120; ++n) {
        const IntPoly p = spider_product_form(n);
        const auto u = unimodality(p);
        REQUIRE(u.is_unimodal);
        CHECK(u.unique_mode);
        CHECK(u.mode_lo == spider_mode(n));
        CHECK(p[u.mode_lo - 1] < p[u.mode_lo]);
        CHECK(p[u.mode_lo + 1] < p[u.mode_lo]);
        CHECK(unimodality(spider_quotient(n)).mode_lo == spider_quotient_mode(n));
    }
    CHECK(spider_mode(2) == 2);
    CHECK(spider_mode(3) == 3);
    CHECK(spider_mode(4) == 3);
}

TEST_CASE("triangle chains")
{
    CHECK(triangle_chain_recurrence(0) == IntPoly{1});
    CHECK(triangle_chain_recurrence(1) == IntPoly{1, 3});
    for (std::size_t n = 2; n <= 14; ++n)
        CHECK(triangle_chain_check(n).status == Status::Pass);
    for (std::size_t n = 1; n <= 14; ++n)
        CHECK(k2_triangle_chain_check(n).status == Status::Pass);
    CHECK_THROWS_AS(triangle_chain_check(1), std::invalid_argument);
    CHECK_THROWS_AS(k2_triangle_chain_check(0), std::invalid_argument);
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(oracle::well_covered(triangle_chain(n)));
        CHECK(oracle::claw_free(k2_triangle_chain(n)));
    }
}

TEST_CASE("centipedes")
{
    CHECK(centipede_recurrence(4) == IntPoly{1, 8, 21, 22, 8});
    for (std::size_t n = 2; n <= 30; ++n)
        all_pass(centipede_checks(n));
    CHECK_THROWS_AS(centipede_checks(1), std::invalid_argument);

    const Graph w = centipede(6);
    std::vector<VertexId> spine, teeth;
    for (std::size_t i = 1; i <= 6; ++i) {
        spine.push_back(centipede_spine(6, i));
        teeth.push_back(centipede_tooth(6, i));
    }
    const Graph r = rewire_centipede_chain(w, spine, teeth);
    CHECK(oracle::claw_free(r));
    CHECK(independence_polynomial(r) == tree_dp(w));
}

TEST_CASE("centipede mode offsets")
{
    const std::vector<std::size_t> base{1, 1, 1, 2, 2};
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK(centipede_mode_offset(n) == base[n - 2]);
    CHECK(centipede_mode_offset(7) == 3);
    CHECK(centipede_mode_offset(11) == 4);

    // Frozen from an independent coefficient scan: the offset formula agrees
    // with the true mode except at n = 32, 37, ..., 57 in this range.
    std::vector<std::size_t> findings;
    for (std::size_t n = 2; n <= 60; ++n) {
        const auto r = centipede_mode_conjecture(n);
        CHECK(r.status != Status::Fail);
        if (r.status == Status::Finding)
            findings.push_back(n);
    }
    CHECK(findings == std::vector<std::size_t>{32, 37, 42, 47, 52, 57});
}

TEST_CASE("p4 rewiring")
{
    CHECK(p4_rewiring_check(complete(4), 0).status == Status::Pass);
    CHECK(p4_rewiring_check(cycle(5), 2).status == Status::Pass);
    CHECK(p4_rewiring_two_sided_check(complete(3), 0, path(3), 0).status == Status::Pass);
    all_pass(p4_rewiring_random_suite(7, 120));
    CHECK_THROWS_AS(p4_rewiring_check(path(3), 3), GraphError);
}

TEST_CASE("claw-free graphs have unimodal polynomials")
{
    Rng rng(99);
    std::size_t seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_line_graph(14, rng);
        REQUIRE(oracle::claw_free(g));
        CHECK(unimodality(independence_polynomial(g)).is_unimodal);
        ++seen;
    }
    CHECK(seen == 300);
}

TEST_CASE("edge joins")
{
    const auto r = edge_join_check(complete(3), 0, path(2), 1);
    CHECK(r.status == Status::Pass);
    all_pass(edge_join_random_suite(3, 40, 40));
    CHECK(edge_join_random_suite(3, 5, 7).size() == 12);
}

TEST_CASE("the claw-free gadget")
{
    const Graph q = claw_free_gadget();
    CHECK(q.order() == 12);
    CHECK(oracle::claw_free(q));
    CHECK(independence_polynomial(q) == tree_dp(gmn(2, 4)));
    const IntPoly factored =
        pow(IntPoly{1, 1}, 3) * IntPoly{1, 2} * IntPoly{1, 7, 11};
    CHECK(tree_dp(gmn(2, 4)) == factored);
    all_pass(g24_checks());
    const Graph h = path(3);
    CHECK(g24_attach_check(h, 1).status == Status::Pass);
    CHECK(g24_bridge_check(h, 0, complete(3), 2).status == Status::Pass);
}

TEST_CASE("claw-free equivalents of joined centipedes")
{
    for (std::size_t m = 2; m <= 5; ++m)
        for (std::size_t n = 2; n <= 6; ++n) {
            const Graph e = gmn_claw_free_equivalent(m, n);
            CHECK(oracle::claw_free(e) == true);
            CHECK(independence_polynomial(e) == tree_dp(gmn(m, n)));
            CHECK(gmn_check(m, n).status == Status::Pass);
        }
    CHECK_THROWS_AS(gmn_claw_free_equivalent(1, 3), std::invalid_argument);
}

TEST_CASE("equal polynomials across well-coveredness")
{
    CHECK(independence_polynomial(fork_tree()) == IntPoly{1, 5, 6, 2});
    CHECK(independence_polynomial(square_and_point()) == IntPoly{1, 5, 6, 2});
    CHECK(independence_polynomial(two_column_graph()) == IntPoly{1, 6, 4});
    CHECK(independence_polynomial(double_apex_path()) == IntPoly{1, 6, 4});
    CHECK_FALSE(oracle::well_covered(fork_tree()));
    CHECK(oracle::well_covered(square_and_point()));
    CHECK_FALSE(oracle::well_covered(two_column_graph()));
    CHECK(oracle::well_covered(double_apex_path()));
    CHECK(equal_polynomial_pair_check("pair", fork_tree(), square_and_point()).status == Status::Pass);
    CHECK(equal_polynomial_pair_check("swapped", square_and_point(), fork_tree()).status == Status::Fail);
}

TEST_CASE("zykov pairs")
{
    for (const auto &seed : zykov_seed_pairs()) {
        const auto z = zykov_pair(seed.l1, seed.v1, seed.l2, seed.v2);
        CHECK(z.report.status == Status::Pass);
        CHECK(oracle::well_covered(z.covered));
        CHECK_FALSE(oracle::well_covered(z.not_covered));
        CHECK(oracle::subset_counts(z.covered) == oracle::subset_counts(z.not_covered));
    }
    CHECK(zykov_seed_pairs().size() >= 3);
    all_pass(zykov_pair_checks());
    CHECK_THROWS_AS(zykov_pair(path(3), 0, path(2), 0), std::invalid_argument);
}

TEST_CASE("report rendering")
{
    CheckReport ok{"thing", {3, 4}, Status::Pass, IntPoly{1, 2}, IntPoly{1, 2}, "fine"};
    CHECK(render_text(ok) == "thing(3,4): PASS fine");
    CheckReport bad{"thing", {}, Status::Fail, IntPoly{1, 2}, IntPoly{1, 3}, ""};
    CHECK(render_text(bad).find("lhs=1 + 2*x rhs=1 + 3*x") != std::string::npos);
    CHECK(status_name(Status::Finding) == "FINDING");
}

TEST_CASE("report JSON round trip")
{
    CheckReport r{"big", {1, -2}, Status::Finding, pow(IntPoly{1, 9}, 30), IntPoly{}, "detail text"};
    const auto j = to_json(r);
    CHECK(j["status"] == "FINDING");
    CHECK(j["lhs"][30] == BigInt(pow(BigInt(9), 30)).str());
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.name == r.name);
    CHECK(back.params == r.params);
    CHECK(back.status == r.status);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.detail == r.detail);
    CHECK_THROWS(report_from_json(nlohmann::json{{"name", "x"}}));
}
