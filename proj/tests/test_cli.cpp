#include "subtrop/cli.hpp"
#include "subtrop/condition.hpp"
#include "subtrop/parser.hpp"

#include "support/random_systems.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace subtrop;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string golden(const std::string& name) { return std::string(SUBTROP_GOLDEN_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "subtrop");
    std::ostringstream out, err;
    const int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("subtrop_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("decide") {
    const Run sat = run({"decide", golden("two_rows_sat.spp"), "--format", "json"});
    CHECK(sat.code == cli::kOk);
    const auto j = nlohmann::json::parse(sat.out);
    CHECK(j["status"] == "sat");
    std::vector<BigInt> n;
    for (const auto& x : j["n"]) n.emplace_back(x.get<long>());
    CHECK(satisfies(build_cnf(parse_system(testing::read_golden("two_rows_sat.spp"))), n));

    const Run unsat = run({"decide", golden("two_rows_unsat.spp"), "--format", "json"});
    CHECK(unsat.code == cli::kUnsat);
    CHECK(unsat.out == "{\"status\":\"unsat\"}\n");

    const Run zero = run({"decide", golden("zero_row.spp"), "--format", "json"});
    CHECK(zero.code == cli::kUnsat);
    CHECK(zero.out == "{\"status\":\"unsat\",\"reason\":\"zero-row\",\"row\":2}\n");
    CHECK(zero.err.find("identically zero polynomial in row 2") != std::string::npos);

    const Run text = run({"decide", golden("quadratic_sat.spp"), "--shrink"});
    CHECK(text.code == cli::kOk);
    CHECK(text.out == "sat\nn = (1)\n");
}

TEST_CASE("decide with oracle cross-check") {
    CHECK(run({"decide", golden("two_rows_sat.spp"), "--check", "--seed", "5"}).code == cli::kOk);
    CHECK(run({"decide", golden("two_rows_unsat.spp"), "--check"}).code == cli::kUnsat);
    CHECK(run({"decide", golden("quadratic_unsat.spp"), "--check"}).code == cli::kUnsat);
}

TEST_CASE("json output is byte-stable") {
    for (const char* cmd : {"decide", "witness", "explain"}) {
        const Run a = run({cmd, golden("two_rows_sat.spp"), "--format", "json"});
        const Run b = run({cmd, golden("two_rows_sat.spp"), "--format", "json"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("witness") {
    const Run ex2 = run({"witness", golden("two_rows_sat.spp"), "--format", "json"});
    CHECK(ex2.code == cli::kOk);
    const auto j = nlohmann::json::parse(ex2.out);
    CHECK(j["t"]["one"] == 1);
    CHECK(j["t"]["terms"].size() == 7);
    CHECK(j["t"]["terms"][0] == nlohmann::json::array({"c11", "c12"}));
    CHECK(j["n"].size() == 2);

    CHECK(run({"witness", golden("quadratic_sat.spp"), "--shrink"}).out == "t = 1 + c1/c2 + c1/c0; z = (t^1)\n");
    CHECK(run({"witness", golden("all_positive.spp")}).out == "t = 1; z = (t^0, t^0)\n");

    const Run none = run({"witness", golden("quadratic_unsat.spp")});
    CHECK(none.code == cli::kUnsat);
    CHECK_FALSE(none.err.empty());
}

TEST_CASE("verify") {
    const Run f = run({"verify", golden("quadratic_sat.spp"), "--coeffs", golden("quadratic_sat_ones.coeffs"), "--shrink"});
    CHECK(f.code == cli::kOk);
    CHECK(f.out == "n = (1)\nt = 3\nr = 3\npoint = (3)\nf = 7\nok\n");

    const Run ex2 = run({"verify", golden("two_rows_sat.spp"), "--coeffs", golden("two_rows_sat_ones.coeffs"), "--format", "json"});
    CHECK(ex2.code == cli::kOk);
    const auto j = nlohmann::json::parse(ex2.out);
    CHECK(j["t"] == "8");
    CHECK(j["r"] == "8");
    CHECK(j["ok"] == true);

    const std::string integer = write_temp("integer.spp", "vars x\npoly f = 2*x^2 - x + 4\n");
    const Run bound = run({"verify", integer, "--use-uniform-bound"});
    CHECK(bound.code == cli::kOk);
    CHECK(bound.out.find("r = 4\n") != std::string::npos);

    const std::string fractional = write_temp("fractional.spp", "vars x\npoly f = 1/2*x^2 - x + 4\n");
    CHECK(run({"verify", fractional, "--use-uniform-bound"}).code == cli::kUsage);

    CHECK(run({"verify", golden("quadratic_unsat.spp"), "--coeffs", golden("quadratic_sat_ones.coeffs")}).code == cli::kUnsat);
    CHECK(run({"verify", golden("quadratic_sat.spp")}).code == cli::kUsage);
    CHECK(run({"verify", golden("three_rows.spp"), "--coeffs", golden("quadratic_sat_ones.coeffs")}).code == cli::kUsage);
    CHECK(run({"verify", integer, "--max-bits", "2"}).code == cli::kUsage);
}

TEST_CASE("explain") {
    const Run g = run({"explain", golden("quadratic_unsat.spp")});
    CHECK(g.code == cli::kOk);
    CHECK(g.out == "clause 1 1: [2: -1]\nclause 1 3: [2: 1]\n");

    const Run j = run({"explain", golden("quadratic_unsat.spp"), "--format", "json"});
    CHECK(j.out == "{\"dim\":1,\"clauses\":[{\"row\":1,\"neg\":1,\"literals\":[{\"pos\":2,\"coeffs\":[-1]}]},"
                   "{\"row\":1,\"neg\":3,\"literals\":[{\"pos\":2,\"coeffs\":[1]}]}]}\n");
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"decide"}).code == cli::kUsage);
    CHECK(run({"decide", golden("missing.spp")}).code == cli::kUsage);
    CHECK(run({"decide", golden("two_rows_sat.spp"), "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"frobnicate", golden("two_rows_sat.spp")}).code == cli::kUsage);

    const std::string broken = write_temp("broken.spp", "vars x\npoly f = 2*x +\n");
    const Run r = run({"decide", broken});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("broken.spp") != std::string::npos);
    CHECK(r.err.find(":2:") != std::string::npos);
}
