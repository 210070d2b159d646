#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Drive the installed binary exactly the way a user would: through the shell,
// capturing streams and the exit status.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_path = "/tmp/cli_out_" + std::to_string(++counter) + ".txt";
    std::string err_path = "/tmp/cli_err_" + std::to_string(counter) + ".txt";
    std::string cmd = std::string(MIXTIME_CLI_PATH) + " " + args + " > " + out_path + " 2> " +
                      err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("version and help exit cleanly") {
    REQUIRE(run_cli("--version").exit_code == 0);
    auto help = run_cli("--help");
    REQUIRE(help.exit_code == 0);
    REQUIRE(help.out.find("tables") != std::string::npos);
    REQUIRE(help.out.find("verify") != std::string::npos);
}

TEST_CASE("bad invocations exit with the validation code") {
    REQUIRE(run_cli("").exit_code == 1);          // a subcommand is required
    REQUIRE(run_cli("nonsense").exit_code == 1);  // unknown subcommand
    REQUIRE(run_cli("tables --what table9").exit_code == 1);
    REQUIRE(run_cli("weights --family indset").exit_code == 1);  // missing -m/-d
    REQUIRE(run_cli("weights --family wrong -m 4 -d 2").exit_code == 1);
    REQUIRE(run_cli("count data/no_such_file.hg").exit_code == 1);
    REQUIRE(run_cli("simulate --chain indset --steps 10").exit_code == 1);  // no instance
}

TEST_CASE("reference table ships all rows with embedded configuration") {
    auto r = run_cli("tables --what table1 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("# tool: mixtime") != std::string::npos);
    REQUIRE(r.out.find("# config:") != std::string::npos);
    REQUIRE(r.out.find("degree,min_palette,ceiling,ratio") != std::string::npos);
    REQUIRE(r.out.find("9,17,17,1.89") != std::string::npos);
    REQUIRE(r.out.find("22,40,41,1.82") != std::string::npos);
    REQUIRE(r.out.find("10000,17634,18334,1.76") != std::string::npos);
    int rows = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line.find("degree") == std::string::npos) ++rows;
    REQUIRE(rows == 43);

    auto j = json::parse(run_cli("tables --format json").out);
    REQUIRE(j["meta"]["tool"] == "mixtime");
    REQUIRE(j["meta"]["config"]["variant"] == "printed");
    REQUIRE(j["rows"].size() == 43);
    REQUIRE(j["rows"][0]["degree"] == 9);
    REQUIRE(j["rows"][0]["min_palette"] == 17);
}

TEST_CASE("weight systems print exact rationals") {
    auto j = json::parse(run_cli("weights --family indset -m 4 -d 2").out);
    REQUIRE(j["gamma"] == "12/17");
    REQUIRE(j["c"] == json::array({"9/17", "11/17", "1"}));
    REQUIRE(j["contracts"] == true);
    REQUIRE(j["residuals_zero"] == true);
    REQUIRE(j["meta"]["version"] == "1.0.0");

    auto csv = run_cli("weights --family indset -m 4 -d 2 --format csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.out.find("gamma,12/17") != std::string::npos);
    REQUIRE(csv.out.find("c0,9/17") != std::string::npos);
    REQUIRE(csv.out.find("c2,1") != std::string::npos);
    REQUIRE(csv.out.find("threshold,34/11") != std::string::npos);

    auto c = json::parse(run_cli("weights --family colouring -q 4 -d 2").out);
    REQUIRE(c["gamma"] == "4/7");
    REQUIRE(c["c2"] == "5/7");
    REQUIRE(c["c3"] == "3/7");
    REQUIRE(c["min_palette"] == 4);
}

TEST_CASE("simulation embeds its seed and reports a legal state") {
    auto j = json::parse(
        run_cli("simulate --chain indset --instance data/overlap.hg --steps 400 --seed 5").out);
    REQUIRE(j["meta"]["config"]["seed"] == 5);
    REQUIRE(j["meta"]["config"]["steps"] == 400);
    REQUIRE(j["independent"] == true);
    REQUIRE(j["vertices"] == 8);

    auto c = json::parse(
        run_cli("simulate --chain colouring --instance data/overlap.hg -q 2 --steps 200 --seed 6")
            .out);
    REQUIRE(c["proper"] == true);

    auto m = json::parse(
        run_cli("simulate --chain multicolour --instance data/k33.bg -q 5 --steps 50 --seed 7")
            .out);
    REQUIRE(m["proper"] == true);
    REQUIRE(m["vertices"] == 6);
}

TEST_CASE("drift experiments exit by outcome") {
    auto j = json::parse(
        run_cli("drift --family indset --instance data/overlap.hg --pairs 40 --seed 3").out);
    REQUIRE(j["violations"] == 0);
    REQUIRE(j["pairs"] == 40);
    REQUIRE(j["examples"].size() == 10);

    auto c = json::parse(
        run_cli("drift --family colouring --instance data/triangle.hg -q 6 --pairs 30 --seed 3")
            .out);
    REQUIRE(c["violations"] == 0);
    REQUIRE(c["equal_outside_pairs"].get<long>() > 0);
    REQUIRE(c.contains("uniform_violations"));

    auto m = json::parse(run_cli("drift --family multicolour --instance data/k33.bg -q 17 "
                                 "--reps 2000 --seed 4")
                             .out);
    REQUIRE(m["pass"] == true);
    REQUIRE(m["mean_ratio"].get<double>() < m["bound_ratio"].get<double>());
}

TEST_CASE("stopping experiments report estimates and censoring") {
    auto j = json::parse(run_cli("stopping --family indset --gen-n 16 --gen-m 4 --gen-d 2 "
                                 "--gen-seed 13 --mode alpha --reps 1000 --pairs 2 --seed 11")
                             .out);
    REQUIRE(j["failed"] == false);
    REQUIRE(j["censored"] == 0);
    double a = j["alpha_hat"].get<double>(), se = j["alpha_stderr"].get<double>();
    REQUIRE(a + 3 * se < 1.0);
    REQUIRE(j["meta"]["config"]["k"] == 32);

    auto c = json::parse(run_cli("stopping --family multicolour --instance data/cycle8.bg "
                                 "--mode coalesce -q 6 --reps 40 --seed 12")
                             .out);
    REQUIRE(c["censored"] == 0);
    REQUIRE(c["coalesced"] == 40);
    REQUIRE(c["mean"].get<double>() > 0.0);
}

TEST_CASE("counting covers both encodings and both modes") {
    auto j = json::parse(run_cli("count data/overlap.hg --mode brute").out);
    REQUIRE(j["count"] == "218");
    REQUIRE(j["meta"]["config"]["input_format"] == "hypergraph");

    auto f = json::parse(run_cli("count data/overlap.cnf --mode brute").out);
    REQUIRE(f["count"] == "218");
    REQUIRE(f["meta"]["config"]["input_format"] == "dimacs");

    auto t = json::parse(run_cli("count data/triangle.cnf --mode brute").out);
    REQUIRE(t["count"] == "7");

    auto a = json::parse(
        run_cli("count data/overlap.hg --mode approx --epsilon 0.3 --delta 0.3 --seed 2").out);
    double est = a["estimate_double"].get<double>();
    REQUIRE(est > 218 * 0.7);
    REQUIRE(est < 218 * 1.3);
    REQUIRE(a["levels"].size() == 3);
    REQUIRE(a["meta"]["config"]["epsilon"] == 0.3);

    // Outside the supported region: a validation failure, not a wrong answer.
    REQUIRE(run_cli("count data/mixed20.hg --mode approx").exit_code == 1);
}

TEST_CASE("output lands in a file when requested") {
    std::string path = "/tmp/cli_redirect_test.json";
    auto r = run_cli("--out " + path + " weights --family indset -m 5 -d 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    REQUIRE(j["gamma"] == "20/49");
    std::remove(path.c_str());
}

TEST_CASE("acceptance wrapper runs a single criterion") {
    auto r = run_cli("verify --criterion 2 --data data");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("[PASS] 02") != std::string::npos);
}
