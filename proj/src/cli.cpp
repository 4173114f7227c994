#include "indpoly/cli.hpp"

#include "indpoly/edge_list.hpp"
#include "indpoly/families.hpp"
#include "indpoly/identities.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/report.hpp"
#include "indpoly/search.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>

namespace indpoly::cli {

namespace {

enum class Format { Text, JsonLines };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::size_t natural(const std::string &token, const char *what)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError(std::string(what) + " must be a natural number, got '" + token + "'");
    return v;
}

std::size_t natural_in(const std::string &token, const char *what, std::size_t lo, std::size_t hi)
{
    auto v = natural(token, what);
    if (v < lo || v > hi)
        throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + token);
    return v;
}

void expect_args(const std::vector<std::string> &args, std::size_t count, const std::string &usage)
{
    if (args.size() != count)
        throw UsageError("usage: " + usage);
}

// Older suite names kept for scripts written against the first interface.
std::string canonical_suite(const std::string &name)
{
    static const std::map<std::string, std::string> aliases{
        {"lemma25", "rewiring"}, {"prop44", "g24"}, {"section5", "equal-polynomials"}, {"conjecture51", "tree-twins"}};
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

// "SEED COUNT", or "COUNT" with the seed taken from --seed.
std::pair<std::uint64_t, std::size_t> seeded_count(const std::vector<std::string> &args, std::uint64_t seed,
                                                   const std::string &usage)
{
    if (args.size() == 1)
        return {seed, natural_in(args[0], "COUNT", 1, 100000)};
    expect_args(args, 2, usage);
    return {natural(args[0], "SEED"), natural_in(args[1], "COUNT", 1, 100000)};
}

Options options_from_env()
{
    Options opts;
    if (const char *bound = std::getenv("INDPOLY_ORACLE_BOUND"))
        opts.oracle_bound = natural(bound, "INDPOLY_ORACLE_BOUND");
    return opts;
}

std::string vertex_list(const std::vector<VertexId> &vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

std::string edge_text(const Graph &g)
{
    std::string s = std::to_string(g.order()) + " vertices:";
    for (auto e : g.edges())
        s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

// Streams reports and remembers whether any check failed.
class Emitter {
public:
    Emitter(std::ostream &out, Format format) : out_(out), format_(format) {}

    void operator()(const CheckReport &r)
    {
        if (format_ == Format::JsonLines)
            out_ << to_json(r).dump() << '\n';
        else
            out_ << render_text(r) << '\n';
        failed_ = failed_ || r.failed();
    }

    void operator()(const std::vector<CheckReport> &rs)
    {
        for (const auto &r : rs)
            (*this)(r);
    }

    void summary(const std::string &name, const std::vector<std::int64_t> &params,
                 const std::vector<std::pair<std::string, std::size_t>> &counts)
    {
        if (format_ == Format::JsonLines) {
            nlohmann::json j{{"name", name}, {"params", params}, {"status", "PASS"},
                             {"lhs", nlohmann::json::array()}, {"rhs", nlohmann::json::array()}, {"detail", ""}};
            for (const auto &[key, value] : counts)
                j["counts"][key] = value;
            out_ << j.dump() << '\n';
            return;
        }
        for (const auto &[key, value] : counts)
            out_ << key << ": " << value << '\n';
    }

    bool failed() const { return failed_; }

private:
    std::ostream &out_;
    Format format_;
    bool failed_ = false;
};

struct Settings {
    std::string method = "auto";
    std::string format = "text";
    std::uint64_t seed = 1;
    std::string out_path;
    std::string in_path;
    std::vector<std::string> family;
    std::vector<std::string> positional;
};

Format format_of(const Settings &s)
{
    if (s.format == "text")
        return Format::Text;
    if (s.format == "jsonl")
        return Format::JsonLines;
    throw UsageError("--format must be text or jsonl");
}

Graph input_graph(const Settings &s)
{
    if (!s.family.empty()) {
        if (!s.in_path.empty())
            throw UsageError("give either a file or --family, not both");
        return generate(FamilySpec::parse(s.family));
    }
    if (s.in_path.empty())
        throw UsageError("missing input file or --family");
    return read_edge_list_file(s.in_path);
}

int cmd_gen(const Settings &s, std::ostream &out)
{
    const Graph g = generate(FamilySpec::parse(s.positional));
    if (s.out_path.empty()) {
        write_edge_list(out, g);
        return kOk;
    }
    write_edge_list_file(s.out_path, g);
    out << "wrote " << s.out_path << ": " << g.order() << " vertices, " << g.size() << " edges\n";
    return kOk;
}

int cmd_poly(const Settings &s, std::ostream &out)
{
    const Graph g = input_graph(s);
    const IntPoly p = independence_polynomial(g, parse_method(s.method), options_from_env());
    out << coefficient_string(p) << '\n';
    out << "degree " << p.degree() << '\n';
    out << "alpha " << p.degree() << '\n';
    return kOk;
}

int verdict(std::ostream &out, const std::string &what, bool value, const std::string &witness)
{
    out << what << ": " << (value ? "true" : "false");
    if (!witness.empty())
        out << ", " << witness;
    out << '\n';
    return value ? kOk : kFalseVerdict;
}

int cmd_check(const Settings &s, std::ostream &out)
{
    if (s.positional.empty())
        throw UsageError("usage: check <file> {unimodal|well-covered|claw-free|tree|well-covered-tree|simplicial <v>}");
    const Graph g = read_edge_list_file(s.in_path);
    const std::string &which = s.positional[0];
    if (which != "simplicial" && s.positional.size() != 1)
        throw UsageError("check " + which + " takes no further arguments");

    if (which == "unimodal") {
        const auto u = unimodality(independence_polynomial(g, Method::Auto, options_from_env()));
        if (u.is_unimodal)
            return verdict(out, which, true,
                           (u.mode_lo == u.mode_hi ? "mode " + std::to_string(u.mode_lo)
                                                   : "modes " + std::to_string(u.mode_lo) + ".." +
                                                         std::to_string(u.mode_hi)) +
                               (u.unique_mode ? " (unique)" : ""));
        const auto &v = *u.violation;
        return verdict(out, which, false,
                       "violation (" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")");
    }
    if (which == "well-covered") {
        const auto wc = well_covered_verdict(g);
        if (wc.well_covered)
            return verdict(out, which, true, "every maximal stable set has size " + std::to_string(wc.max_size));
        return verdict(out, which, false,
                       "maximal stable sets of sizes " + std::to_string(wc.min_size) + " and " +
                           std::to_string(wc.max_size) + ": " + vertex_list(wc.smallest) + " and " +
                           vertex_list(wc.largest));
    }
    if (which == "claw-free") {
        const auto claw = find_claw(g);
        if (!claw)
            return verdict(out, which, true, "");
        return verdict(out, which, false,
                       "claw centre " + std::to_string((*claw)[0]) + " leaves " + std::to_string((*claw)[1]) + " " +
                           std::to_string((*claw)[2]) + " " + std::to_string((*claw)[3]));
    }
    if (which == "tree")
        return verdict(out, which, is_tree(g), "");
    if (which == "well-covered-tree") {
        if (!is_tree(g))
            throw UsageError("well-covered-tree: input is not a tree");
        if (g.order() == 1)
            return verdict(out, which, true, "single vertex");
        const auto matching = pendant_perfect_matching(g);
        if (!matching)
            return verdict(out, which, false, "no perfect matching of pendant edges");
        std::string text = "pendant matching";
        for (auto e : *matching)
            text += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
        return verdict(out, which, true, text);
    }
    if (which == "simplicial") {
        if (s.positional.size() != 2)
            throw UsageError("usage: check <file> simplicial <v>");
        const auto v = natural(s.positional[1], "vertex");
        if (v >= g.order())
            throw UsageError("vertex " + s.positional[1] + " out of range");
        const auto vid = static_cast<VertexId>(v);
        return verdict(out, "simplicial " + s.positional[1], is_simplicial(g, vid),
                       "neighbours " + vertex_list(g.neighbors(vid)));
    }
    throw UsageError("unknown check '" + which + "'");
}

int cmd_verify(const Settings &s, std::ostream &out)
{
    if (s.positional.empty())
        throw UsageError("usage: verify {spiders N|deltas N|centipedes N|rewiring [SEED] COUNT|gmn M N|g24|"
                         "equal-polynomials|edge-join [SEED] COUNT|fibonacci N}");
    Emitter emit(out, format_of(s));
    const std::string suite = canonical_suite(s.positional[0]);
    const std::vector<std::string> args(s.positional.begin() + 1, s.positional.end());

    if (suite == "spiders") {
        expect_args(args, 1, "verify spiders N");
        const auto n = natural_in(args[0], "N", 2, 1000);
        for (std::size_t k = 2; k <= n; ++k)
            emit(spider_check(k));
    } else if (suite == "deltas") {
        expect_args(args, 1, "verify deltas N");
        const auto n = natural_in(args[0], "N", 2, 200);
        for (std::size_t k = 2; k <= n; ++k)
            emit(triangle_chain_check(k));
        for (std::size_t k = 1; k <= n; ++k)
            emit(k2_triangle_chain_check(k));
    } else if (suite == "centipedes") {
        expect_args(args, 1, "verify centipedes N");
        const auto n = natural_in(args[0], "N", 2, 200);
        for (std::size_t k = 2; k <= n; ++k) {
            emit(centipede_checks(k));
            emit(centipede_mode_conjecture(k));
        }
    } else if (suite == "rewiring") {
        const auto [seed, count] = seeded_count(args, s.seed, "verify rewiring [SEED] COUNT");
        emit(p4_rewiring_random_suite(seed, count));
    } else if (suite == "edge-join") {
        const auto [seed, count] = seeded_count(args, s.seed, "verify edge-join [SEED] COUNT");
        emit(edge_join_random_suite(seed, count, count));
    } else if (suite == "gmn") {
        expect_args(args, 2, "verify gmn M N");
        const auto m = natural_in(args[0], "M", 2, 40);
        const auto n = natural_in(args[1], "N", 2, 40);
        for (std::size_t i = 2; i <= m; ++i)
            for (std::size_t j = 2; j <= n; ++j)
                emit(gmn_check(i, j));
    } else if (suite == "g24") {
        expect_args(args, 0, "verify g24");
        emit(g24_checks());
    } else if (suite == "equal-polynomials") {
        expect_args(args, 0, "verify equal-polynomials");
        emit(zykov_pair_checks());
    } else if (suite == "fibonacci") {
        expect_args(args, 1, "verify fibonacci N");
        const auto n = natural_in(args[0], "N", 3, 200);
        for (std::size_t k = 0; k <= n; ++k)
            emit(fibonacci_binomial_check(k));
        for (std::size_t k = 1; k <= n; ++k)
            emit(path_fibonacci_check(k));
        for (std::size_t k = 3; k <= n; ++k)
            emit(cycle_fibonacci_check(k));
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    return emit.failed() ? kFalseVerdict : kOk;
}

CheckReport twin_report(const std::string &name, const PolynomialTwin &twin, Status status)
{
    CheckReport r{name, {static_cast<std::int64_t>(twin.tree.order())}, status, twin.poly, twin.poly, {}};
    r.detail = "tree " + edge_text(twin.tree) + " | graph " + edge_text(twin.graph);
    return r;
}

int cmd_search(const Settings &s, std::ostream &out)
{
    if (s.positional.empty())
        throw UsageError("usage: search {tree-twins T G|unimodality N}");
    Emitter emit(out, format_of(s));
    const std::string which = canonical_suite(s.positional[0]);
    const std::vector<std::string> args(s.positional.begin() + 1, s.positional.end());

    if (which == "tree-twins") {
        expect_args(args, 2, "search tree-twins T G");
        const auto t = natural_in(args[0], "T", 1, kMaxSearchTreeOrder);
        const auto g = natural_in(args[1], "G", 1, kMaxSearchGraphOrder);
        const auto result = search_tree_twins(t, g);
        for (const auto &twin : result.counterexamples)
            emit(twin_report("tree-twin-counterexample", twin, Status::Finding));
        for (const auto &twin : result.uncovered_tree_twins)
            emit(twin_report("uncovered-tree-twin", twin, Status::Pass));
        emit.summary("tree-twin-summary", {static_cast<std::int64_t>(t), static_cast<std::int64_t>(g)},
                     {{"trees examined", result.trees_examined},
                      {"well-covered trees", result.well_covered_trees},
                      {"graphs examined", result.graphs_examined},
                      {"pairs examined", result.pairs_examined},
                      {"confirmations", result.confirmations},
                      {"counterexamples", result.counterexamples.size()},
                      {"uncovered tree twins", result.uncovered_tree_twins.size()}});
    } else if (which == "unimodality") {
        expect_args(args, 1, "search unimodality N");
        const auto n = natural_in(args[0], "N", 1, kMaxSearchGraphOrder);
        const auto result = wellcovered_unimodality_sweep(n);
        for (const auto &g : result.violations) {
            auto p = independence_polynomial(g);
            emit(CheckReport{"well-covered-unimodality-violation", {static_cast<std::int64_t>(g.order())},
                             Status::Finding, p, p, edge_text(g)});
        }
        for (const auto &g : result.claw_free_violations) {
            auto p = independence_polynomial(g);
            emit(CheckReport{"claw-free-unimodality-violation", {static_cast<std::int64_t>(g.order())},
                             Status::Fail, p, p, edge_text(g)});
        }
        emit.summary("unimodality-summary", {static_cast<std::int64_t>(n)},
                     {{"graphs examined", result.graphs_examined},
                      {"well-covered", result.well_covered},
                      {"violations", result.violations.size()},
                      {"claw-free", result.claw_free},
                      {"claw-free violations", result.claw_free_violations.size()}});
        // A unimodality failure on a claw-free graph is a bug, not a finding.
        if (!result.claw_free_violations.empty())
            throw std::logic_error("claw-free graph with a non-unimodal independence polynomial");
    } else {
        throw UsageError("unknown search '" + which + "'");
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact independence polynomials and identity checks for small graphs", "indpoly"};
    app.require_subcommand(1);
    Settings s;

    auto *gen = app.add_subcommand("gen", "Write the edge list of a named family instance");
    gen->add_option("family", s.positional, "Family name and parameters, e.g. spider 6")->required();
    gen->add_option("--out", s.out_path, "Output file (stdout when omitted)");

    auto *poly = app.add_subcommand("poly", "Print the independence polynomial coefficients");
    poly->add_option("file", s.in_path, "Edge-list file");
    poly->add_option("--family", s.family, "Family name and parameters instead of a file")->expected(1, -1);
    poly->add_option("--method", s.method, "oracle|vertex-recursion|clique-recursion|edge-recursion|tree-dp|auto");

    auto *check = app.add_subcommand("check", "Test a structural predicate");
    check->add_option("file", s.in_path, "Edge-list file")->required();
    check->add_option("predicate", s.positional, "unimodal|well-covered|claw-free|tree|well-covered-tree|simplicial v")
        ->required();

    auto *verify = app.add_subcommand("verify", "Run an identity verification suite");
    verify->add_option("suite", s.positional, "Suite name and parameters")->required();
    verify->add_option("--format", s.format, "text|jsonl");
    verify->add_option("--seed", s.seed, "Seed for randomised suites");

    auto *search = app.add_subcommand("search", "Run an exhaustive small-graph search");
    search->add_option("which", s.positional, "tree-twins T G | unimodality N")->required();
    search->add_option("--format", s.format, "text|jsonl");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (gen->parsed())
            return cmd_gen(s, out);
        if (poly->parsed())
            return cmd_poly(s, out);
        if (check->parsed())
            return cmd_check(s, out);
        if (verify->parsed())
            return cmd_verify(s, out);
        if (search->parsed())
            return cmd_search(s, out);
    } catch (const BoundExceeded &e) {
        err << "bound exceeded: " << e.what() << '\n';
        return kBoundExceeded;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace indpoly::cli
