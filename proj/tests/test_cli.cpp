#include <doctest.h>

#include <regex>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "binsum/cli.hpp"

using namespace binsum;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string drop_elapsed(const std::string& text) {
    static const std::regex field("\"elapsed_ms\": [0-9]+");
    return std::regex_replace(text, field, "\"elapsed_ms\": 0");
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parameter parsing") {
    CHECK(cli::parse_quad("2") == QuadElem(2));
    CHECK(cli::parse_quad("-7") == QuadElem(-7));
    CHECK(cli::parse_quad("1/2") == QuadElem(Rational(1, 2)));
    CHECK(cli::parse_quad("sqrt:3") == QuadElem(Rational(0), Rational(1), 3));
    CHECK(cli::parse_quad("2sqrt:3") == QuadElem(Rational(0), Rational(2), 3));
    CHECK(cli::parse_quad("-2sqrt:3") == QuadElem(Rational(0), Rational(-2), 3));
    CHECK(cli::parse_quad("1+2sqrt:3") == QuadElem(Rational(1), Rational(2), 3));
    CHECK(cli::parse_quad("1-sqrt:2") == QuadElem(Rational(1), Rational(-1), 2));
    CHECK(cli::parse_quad("1/2+3/4sqrt:5") == QuadElem(Rational(1, 2), Rational(3, 4), 5));
    CHECK(cli::parse_quad("sqrt:4") == QuadElem(2));
    CHECK_THROWS_AS(cli::parse_quad("sqrt:"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_quad("abc"), std::invalid_argument);

    CHECK(cli::parse_range_list("3") == std::vector<Integer>{3});
    CHECK(cli::parse_range_list("1..4") == std::vector<Integer>{1, 2, 3, 4});
    CHECK(cli::parse_range_list("2,6,10") == std::vector<Integer>{2, 6, 10});
    CHECK(cli::parse_range_list("1..2,9") == std::vector<Integer>{1, 2, 9});
    CHECK(cli::parse_range_list("5..4").empty());
}

TEST_CASE("seq subcommand") {
    RunResult pell = run_cli({"seq", "--p", "2", "--kind", "u", "--n", "5"});
    CHECK(pell.code == 0);
    CHECK(pell.out == "29\n");
    RunResult lucas = run_cli({"seq", "--kind", "v", "--n", "4"});
    CHECK(lucas.code == 0);
    CHECK(lucas.out == "7\n");
    RunResult surd = run_cli({"seq", "--kind", "u", "--p", "sqrt:3", "--n", "4"});
    CHECK(surd.out == "0+5*sqrt(3)\n");
    RunResult negative = run_cli({"seq", "--kind", "u", "--n=-4"});
    CHECK(negative.out == "-3\n");  // F_{-4} = -F_4
    RunResult negv = run_cli({"seq", "--kind", "v", "--n=-3"});
    CHECK(negv.out == "-4\n");  // L_{-3} = -L_3
}

TEST_CASE("verify new1 passes") {
    RunResult r = run_cli({"verify", "--identity", "new1", "--n", "1..15"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["identity"] == "new1");
    CHECK(doc["checked"] == 15);
    CHECK(doc["passed"] == 15);
    CHECK(doc["counterexamples"].empty());
}

TEST_CASE("verify new32 reports the erratum") {
    RunResult r = run_cli({"verify", "--identity", "new32", "--n", "1..5"});
    CHECK(r.code == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["form"] == "printed");
    CHECK(doc["passed"] == 0);
    CHECK(doc["counterexamples"].size() == 5);
    CHECK(doc["corrected_form_passes"] == true);
    CHECK(doc["printed_form_passes"] == false);
}

TEST_CASE("verify u_power paper form fails where the oracle says so") {
    RunResult good = run_cli({"verify", "--identity", "u_power", "--n", "0..6", "--r", "1..3",
                              "--p", "1,2"});
    CHECK(good.code == 0);
    RunResult paper = run_cli({"verify", "--identity", "u_power", "--n", "1..1", "--r", "2..2",
                               "--p", "1", "--paper-form"});
    CHECK(paper.code == 1);
    auto doc = nlohmann::json::parse(paper.out);
    CHECK(doc["form"] == "printed");
    CHECK(doc["counterexamples"][0]["lhs"] == "1");
    CHECK(doc["counterexamples"][0]["rhs"] == "19/25");
    CHECK(doc["corrected_form_passes"] == true);
}

TEST_CASE("verify accepts surd parameters") {
    RunResult r = run_cli({"verify", "--identity", "u_power", "--n", "0..8", "--r", "1..2",
                           "--p", "sqrt:3,1+1sqrt:2"});
    CHECK(r.code == 0);
}

TEST_CASE("table emits the v2k rows") {
    RunResult csv = run_cli({"table", "--identity", "v2k", "--n", "0..3", "--p", "1",
                             "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out ==
          "n,p,lhs,rhs,equal\n"
          "0,1,2,2,true\n"
          "1,1,7,7,true\n"
          "2,1,31,31,true\n"
          "3,1,145,145,true\n");
    RunResult json = run_cli({"table", "--identity", "v2k", "--n", "0..3", "--p", "1"});
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["rows"][3]["lhs"] == "145");
}

TEST_CASE("table congruence rows carry residues") {
    RunResult r = run_cli({"table", "--identity", "cong25", "--n", "1..4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,lhs,rhs,equal\n"
          "1,0,0,true\n"
          "2,0,0,true\n"
          "3,0,0,true\n"
          "4,0,0,true\n");
}

TEST_CASE("congruence subcommand") {
    RunResult r = run_cli({"congruence", "--id", "mod25", "--n-max", "100"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["identity"] == "cong25");
    CHECK(doc["passed"] == 100);
    RunResult r625 = run_cli({"congruence", "--id", "mod625", "--n-max", "50"});
    CHECK(r625.code == 0);
}

TEST_CASE("represent subcommand") {
    RunResult r = run_cli({"represent", "--w", "7", "--n", "1..12"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["identity"] == "rep_power_sum");
    CHECK(doc["passed"] == 12);
    RunResult csv = run_cli({"represent", "--w", "5", "--n", "3", "--format", "csv"});
    CHECK(csv.out == "w,n,lhs,rhs,equal\n5,3,25,25,true\n");
    RunResult bad = run_cli({"represent", "--w", "3", "--n", "1"});
    CHECK(bad.code == 2);
}

TEST_CASE("eval subcommand") {
    RunResult r = run_cli({"eval", "--identity", "classic_1a", "--args", "3"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["lhs"] == "8");
    CHECK(doc["rhs"] == "8");
    CHECK(doc["equal"] == true);
    RunResult hog = run_cli({"eval", "--identity", "hoggatt", "--args", "2", "1"});
    CHECK(hog.code == 0);
    RunResult unequal = run_cli({"eval", "--identity", "new32", "--args", "2"});
    CHECK(unequal.code == 1);
    RunResult up = run_cli({"eval", "--identity", "u_power", "--args", "2", "1", "--p", "2"});
    CHECK(up.code == 0);
    auto updoc = nlohmann::json::parse(up.out);
    CHECK(updoc["lhs"] == "8");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);                                      // missing identity
    CHECK(run_cli({"verify", "--identity", "nope"}).code == 2);                // unknown identity
    CHECK(run_cli({"verify", "--identity", "new1", "--n", "9..1"}).code == 2); // empty range
    CHECK(run_cli({"verify", "--identity", "new1", "--r", "1..2"}).code == 2); // no such axis
    CHECK(run_cli({"verify", "--identity", "new1", "--p", "2"}).code == 2);    // fixed p
    CHECK(run_cli({"seq", "--kind", "w", "--n", "1"}).code == 2);
    CHECK(run_cli({"seq", "--kind", "u", "--n", "x"}).code == 2);
    CHECK(run_cli({"table", "--identity", "diff_sum", "--m", "1,3"}).code == 2);  // odd-only m
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify output is byte-stable") {
    const std::vector<std::string> args{"verify", "--identity", "u_power",
                                        "--n", "0..10", "--r", "1..3", "--p", "1,2"};
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(drop_elapsed(first.out) == drop_elapsed(second.out));
}

}  // TEST_SUITE
