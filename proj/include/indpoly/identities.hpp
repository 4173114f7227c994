#pragma once

#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"
#include "indpoly/random_graphs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indpoly {

enum class Status { Pass, Fail, Finding };

std::string_view status_name(Status s);

/// One verified identity or predicate. Findings are conjecture outcomes
/// that disagree with the prediction; they are data, not failures.
struct CheckReport {
    std::string name;
    std::vector<std::int64_t> params;
    Status status = Status::Pass;
    IntPoly lhs;
    IntPoly rhs;
    std::string detail;

    bool failed() const { return status == Status::Fail; }
};

// Fibonacci, paths and cycles ----------------------------------------------

CheckReport fibonacci_binomial_check(std::size_t n);
/// I(P_n) against F_{n+1}.
CheckReport path_fibonacci_check(std::size_t n);
/// I(C_n) against F_{n-1} + 2x F_{n-2}; n >= 3.
CheckReport cycle_fibonacci_check(std::size_t n);
/// I(K_n) against 1 + nx.
CheckReport complete_graph_check(std::size_t n);
/// `count` parts of size `part`: against count (1+x)^part - (count-1).
CheckReport complete_multipartite_check(std::size_t part, std::size_t count);

// Spiders ------------------------------------------------------------------

/// 1 + sum_k A(k) x^k with A(k) = C(n,k) 2^k + C(n-1,k-1).
IntPoly spider_quotient(std::size_t n);
/// (1+x) times spider_quotient(n). Throws std::invalid_argument for n < 2.
IntPoly spider_closed_form(std::size_t n);
/// (1+x)(1+2x)^n + x(1+x)^n, expanded by polynomial multiplication.
IntPoly spider_product_form(std::size_t n);
/// 1 + (n-1) mod 3 + 2(ceil(n/3) - 1)
std::size_t spider_mode(std::size_t n);
/// n - 1 - floor((n-2)/3)
std::size_t spider_quotient_mode(std::size_t n);

/// Closed form against the tree DP (n <= dp_limit) or the product form,
/// with unimodality, a unique mode at spider_mode(n) and the mode predicted
/// from the quotient by degree_one_product_mode.
CheckReport spider_check(std::size_t n, std::size_t dp_limit = 40);

// Triangle chains and centipedes ---------------------------------------------

/// I(triangle chain of length n) from the three-term recurrence, bases 1 and 1+3x.
IntPoly triangle_chain_recurrence(std::size_t n);

/// Direct computation against the recurrence. Adds well-coveredness for
/// n <= 6 and claw-freeness for n <= 12. Throws for n < 2.
CheckReport triangle_chain_check(std::size_t n);
/// I(K2 joined to the chain) against (1+2x) I(chain_n) - x^2 I(chain_{n-1}),
/// with the same structural side checks. Throws for n < 1.
CheckReport k2_triangle_chain_check(std::size_t n);

/// (1+x)(I(W_{n-1}) + x I(W_{n-2})) from bases 1 and 1+2x.
IntPoly centipede_recurrence(std::size_t n);

/// Rewires consecutive spine pairs of a centipede hanging from the rest of g
/// into triangles. spine[i] carries the pendant tooth[i]. Each rewiring
/// keeps the independence polynomial.
Graph rewire_centipede_chain(const Graph &g, const std::vector<VertexId> &spine, const std::vector<VertexId> &teeth);

/// Parity factorization, recurrence, rewired claw-free equivalent and
/// unimodality for W_n, each against tree_dp(W_n). n >= 2.
std::vector<CheckReport> centipede_checks(std::size_t n);

std::size_t centipede_mode_offset(std::size_t n);
/// Pass when n - f(n) lies in the mode interval of I(W_n), a Finding otherwise.
CheckReport centipede_mode_conjecture(std::size_t n);

// Rewiring a pendant P4 --------------------------------------------------------

/// joins b of a-b-c-d to v, rewires cd to ac and compares polynomials. When
/// g is claw-free with v simplicial the rewired graph must be claw-free and
/// its polynomial unimodal.
CheckReport p4_rewiring_check(const Graph &g, VertexId v);
/// b joined to v1 in g1, c joined to v2 in g2.
CheckReport p4_rewiring_two_sided_check(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2);
/// `count` seeded instances mixing both variants over random graphs, trees
/// and line graphs with at most 9 vertices.
std::vector<CheckReport> p4_rewiring_random_suite(std::uint64_t seed, std::size_t count);

// Edge-join ------------------------------------------------------------------

/// Direct polynomial of the join against edge_join_formula. When both
/// sides are well-covered and join-admissible, also checks that the join is
/// well-covered with additive stability number.
CheckReport edge_join_check(const Graph &g1, VertexId v1, const Graph &g2, VertexId v2);
/// Random well-covered pairs followed by arbitrary pairs, components with at
/// most 9 vertices.
std::vector<CheckReport> edge_join_random_suite(std::uint64_t seed, std::size_t well_covered_pairs,
                                                std::size_t arbitrary_pairs);

// Centipede edge-joins -----------------------------------------------------------

/// 3K1 + K2 + (K4 joined to K3), as disjoint union. The attachment points are
/// kGadgetTriangleTip and kGadgetSquareTip.
Graph claw_free_gadget();
inline constexpr VertexId kGadgetTriangleTip = 5;
inline constexpr VertexId kGadgetSquareTip = 11;
/// Vertices of G_{2,4} playing the roles of the two gadget tips.
inline constexpr VertexId kG24FarSpine = 7;
inline constexpr VertexId kG24NearSpine = 1;

/// Claw-free graph with the same independence polynomial as G_{m,n}.
Graph gmn_claw_free_equivalent(std::size_t m, std::size_t n);

/// G_{2,4} against the gadget and the factored form, then attachments of
/// small graphs at one or both tips.
std::vector<CheckReport> g24_checks();
CheckReport g24_attach_check(const Graph &h, VertexId w);
CheckReport g24_bridge_check(const Graph &h1, VertexId w1, const Graph &h2, VertexId w2);

/// I(G_{m,n}) = I(equivalent), equivalent claw-free, polynomial unimodal.
CheckReport gmn_check(std::size_t m, std::size_t n);

// Equal polynomials, different well-coveredness -------------------------------

/// Tree with a centre, two leaves and a leg of length two.
Graph fork_tree();
/// C4 plus an isolated vertex.
Graph square_and_point();
/// Two columns of three vertices with eleven edges; not well-covered.
Graph two_column_graph();
/// P4 with two apexes adjacent to every path vertex; well-covered.
Graph double_apex_path();

/// Equal polynomials; the first graph must fail and the second pass the
/// well-covered test.
CheckReport equal_polynomial_pair_check(const std::string &name, const Graph &not_covered, const Graph &covered);

struct ZykovPair {
    Graph covered;
    Graph not_covered;
    CheckReport report;
};

/// G1 = L + (H1 + H2 + 2K1) and G2 = (L1 + L2) + (H1 + H2 + K2) with L the
/// edge-join of (L1;v1) and (L2;v2) and H_i = L_i - N[v_i]. Throws
/// std::invalid_argument unless L1, L2 and L are well-covered with
/// alpha(L) = alpha(L1) + alpha(L2).
ZykovPair zykov_pair(const Graph &l1, VertexId v1, const Graph &l2, VertexId v2);

struct SeedPair {
    std::string label;
    Graph l1;
    VertexId v1;
    Graph l2;
    VertexId v2;
};
std::vector<SeedPair> zykov_seed_pairs();
std::vector<CheckReport> zykov_pair_checks();

}  // namespace indpoly
