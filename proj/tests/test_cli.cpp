#include "indpoly/cli.hpp"
#include "indpoly/edge_list.hpp"
#include "indpoly/families.hpp"
#include "indpoly/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace indpoly;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name)
{
    const auto dir = fs::temp_directory_path() / "indpoly_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string &name, const std::string &text)
{
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("gen writes an edge list that parses back")
{
    const auto r = run({"gen", "centipede", "3"});
    CHECK(r.code == cli::kOk);
    std::istringstream in(r.out);
    CHECK(read_edge_list(in) == centipede(3));

    const auto path = scratch("w5.txt").string();
    const auto w = run({"gen", "W", "5", "--out", path});
    CHECK(w.code == cli::kOk);
    CHECK(w.out.find("10 vertices, 9 edges") != std::string::npos);
    CHECK(read_edge_list_file(path) == centipede(5));
}

TEST_CASE("gen rejects bad families")
{
    CHECK(run({"gen", "spider", "1"}).code == cli::kUsageError);
    CHECK(run({"gen", "dodecahedron"}).code == cli::kUsageError);
    CHECK(run({"gen"}).code == cli::kUsageError);
}

TEST_CASE("poly prints coefficients, degree and stability number")
{
    const auto r = run({"poly", "--family", "star", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(lines(r.out) == std::vector<std::string>{"1 4 3 1", "degree 3", "alpha 3"});

    const auto path = scratch("g23.txt").string();
    write_edge_list_file(path, gmn(2, 3));
    for (const char *m : {"oracle", "vertex-recursion", "clique-recursion", "edge-recursion", "tree-dp", "auto"})
        CHECK(lines(run({"poly", path, "--method", m}).out).front() == "1 10 36 60 47 14");

    CHECK(run({"poly", path, "--method", "guess"}).code == cli::kUsageError);
    CHECK(run({"poly"}).code == cli::kUsageError);
    CHECK(run({"poly", path, "--family", "K", "3"}).code == cli::kUsageError);
    CHECK(run({"poly", "--family", "cycle", "4", "--method", "tree-dp"}).code == cli::kUsageError);
}

TEST_CASE("poly reports malformed files as usage errors")
{
    const auto bad = write("bad.txt", "3 2\n0 1\n");
    const auto r = run({"poly", bad});
    CHECK(r.code == cli::kUsageError);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"poly", scratch("missing.txt").string()}).code == cli::kUsageError);
}

TEST_CASE("oracle bound override")
{
    const auto path = scratch("p8.txt").string();
    write_edge_list_file(path, generate(FamilySpec::parse({"path", "8"})));
    ::setenv("INDPOLY_ORACLE_BOUND", "5", 1);
    CHECK(run({"poly", path, "--method", "oracle"}).code == cli::kBoundExceeded);
    CHECK(run({"poly", path}).code == cli::kOk);
    ::setenv("INDPOLY_ORACLE_BOUND", "many", 1);
    CHECK(run({"poly", path}).code == cli::kUsageError);
    ::unsetenv("INDPOLY_ORACLE_BOUND");
    CHECK(run({"poly", path, "--method", "oracle"}).code == cli::kOk);
}

TEST_CASE("check verdicts and exit codes")
{
    const auto tree = scratch("g24.txt").string();
    write_edge_list_file(tree, gmn(2, 4));
    const auto c5 = scratch("c5.txt").string();
    write_edge_list_file(c5, cycle(5));
    const auto p5 = scratch("p5.txt").string();
    write_edge_list_file(p5, path(5));

    CHECK(run({"check", tree, "unimodal"}).code == cli::kOk);
    CHECK(run({"check", tree, "tree"}).code == cli::kOk);
    CHECK(run({"check", c5, "tree"}).code == cli::kFalseVerdict);
    CHECK(run({"check", tree, "well-covered-tree"}).code == cli::kOk);
    CHECK(run({"check", p5, "well-covered-tree"}).code == cli::kFalseVerdict);
    CHECK(run({"check", c5, "well-covered-tree"}).code == cli::kUsageError);
    CHECK(run({"check", c5, "well-covered"}).code == cli::kOk);

    const auto wc = run({"check", p5, "well-covered"});
    CHECK(wc.code == cli::kFalseVerdict);
    CHECK(wc.out.find("{0,2,4}") != std::string::npos);

    const auto claw = run({"check", tree, "claw-free"});
    CHECK(claw.code == cli::kFalseVerdict);
    CHECK(claw.out.find("claw centre") != std::string::npos);
    CHECK(run({"check", c5, "claw-free"}).code == cli::kOk);

    CHECK(run({"check", p5, "simplicial", "0"}).code == cli::kOk);
    CHECK(run({"check", p5, "simplicial", "2"}).code == cli::kFalseVerdict);
    CHECK(run({"check", p5, "simplicial", "9"}).code == cli::kUsageError);
    CHECK(run({"check", p5, "simplicial"}).code == cli::kUsageError);
    CHECK(run({"check", p5, "planar"}).code == cli::kUsageError);
}

TEST_CASE("verify suites")
{
    const auto r = run({"verify", "spiders", "8"});
    CHECK(r.code == cli::kOk);
    CHECK(lines(r.out).size() == 7);
    CHECK(r.out.find("FAIL") == std::string::npos);

    CHECK(run({"verify", "deltas", "6"}).code == cli::kOk);
    CHECK(run({"verify", "centipedes", "10"}).code == cli::kOk);
    CHECK(run({"verify", "rewiring", "4", "20"}).code == cli::kOk);
    CHECK(run({"verify", "edge-join", "4", "10"}).code == cli::kOk);
    CHECK(run({"verify", "rewiring", "9", "--seed", "4"}).out == run({"verify", "rewiring", "4", "9"}).out);
    CHECK(run({"verify", "rewiring", "9", "--seed", "5"}).out != run({"verify", "rewiring", "4", "9"}).out);
    CHECK(run({"verify", "gmn", "3", "4"}).code == cli::kOk);
    CHECK(lines(run({"verify", "gmn", "3", "4"}).out).size() == 6);
    CHECK(run({"verify", "g24"}).code == cli::kOk);
    CHECK(run({"verify", "equal-polynomials"}).code == cli::kOk);
    CHECK(run({"verify", "fibonacci", "10"}).code == cli::kOk);
}

TEST_CASE("verify rejects bad parameters")
{
    CHECK(run({"verify", "spiders", "1"}).code == cli::kUsageError);
    CHECK(run({"verify", "spiders", "-3"}).code == cli::kUsageError);
    CHECK(run({"verify", "spiders"}).code == cli::kUsageError);
    CHECK(run({"verify", "gmn", "1", "4"}).code == cli::kUsageError);
    CHECK(run({"verify", "g24", "7"}).code == cli::kUsageError);
    CHECK(run({"verify", "astrology"}).code == cli::kUsageError);
    CHECK(run({"verify", "spiders", "4", "--format", "xml"}).code == cli::kUsageError);
}

TEST_CASE("verify jsonl output parses into reports")
{
    const auto r = run({"verify", "equal-polynomials", "--format", "jsonl"});
    CHECK(r.code == cli::kOk);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 6);
    for (const auto &line : ls) {
        const auto report = report_from_json(nlohmann::json::parse(line));
        CHECK(report.status == Status::Pass);
        CHECK(report.lhs == report.rhs);
        CHECK_FALSE(report.lhs.is_zero());
    }
}

TEST_CASE("search summaries")
{
    const auto r = run({"search", "tree-twins", "6", "5"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("counterexamples: 0") != std::string::npos);
    CHECK(r.out.find("pairs examined: ") != std::string::npos);
    CHECK(r.out.find("confirmations: ") != std::string::npos);
    CHECK(r.out.find("uncovered-tree-twin(5)") != std::string::npos);

    const auto u = run({"search", "unimodality", "5"});
    CHECK(u.code == cli::kOk);
    CHECK(u.out.find("violations: 0") != std::string::npos);

    const auto j = run({"search", "unimodality", "4", "--format", "jsonl"});
    const auto summary = nlohmann::json::parse(lines(j.out).back());
    CHECK(summary["counts"]["violations"] == 0);
    CHECK(summary["counts"]["graphs examined"] == 1 + 2 + 4 + 11);

    CHECK(run({"search", "tree-twins", "99", "5"}).code == cli::kUsageError);
    CHECK(run({"search", "unimodality", "8"}).code == cli::kUsageError);
    CHECK(run({"search", "tree-twins", "5"}).code == cli::kUsageError);
    CHECK(run({"search", "everything"}).code == cli::kUsageError);
}

TEST_CASE("top-level usage")
{
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kOk);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"gen", "--bogus"}).code == cli::kUsageError);
}

TEST_CASE("older suite names resolve")
{
    CHECK(run({"verify", "lemma25", "2", "5"}).out == run({"verify", "rewiring", "2", "5"}).out);
    CHECK(run({"verify", "prop44"}).code == cli::kOk);
    CHECK(run({"verify", "section5"}).code == cli::kOk);
    CHECK(run({"search", "conjecture51", "5", "5"}).out == run({"search", "tree-twins", "5", "5"}).out);
}
