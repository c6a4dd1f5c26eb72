#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  ///< stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string command = std::string(HARMOMAP_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(HARMOMAP_TEST_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "harmomap_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("certify a hypergeometric family") {
    const auto r = run("certify --family T41a --a 1 --b 1 --c 4 --alpha 0.2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: certified"));
    CHECK(contains(r.output, "sum: 0.9"));
  }

  TEST_CASE("certify a coefficient file") {
    const auto r = run("certify --coeffs " + data("f0.json") + " --criterion lemma13");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "sum: 2.2"));
    CHECK(contains(r.output, "not-certified"));
    CHECK(contains(r.output, "sufficient only"));
  }

  TEST_CASE("certify reports violated hypotheses") {
    const auto r = run("certify --family T41a --a 1 --b 1 --c 2.5 --alpha 0.2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "requires c > a+b+1"));
    CHECK(run("certify --family T99").exit_code == 2);
    CHECK(run("certify --coeffs " + data("missing.json")).exit_code == 2);
    CHECK(run("certify --coeffs " + data("f0.json") + " --criterion fully-starlike").exit_code == 1);
  }

  TEST_CASE("certify JSON and series cross-check") {
    const auto r = run("certify --family T41a --a 1 --b 1 --c 4 --alpha 0.2 --cross-check --series 2000 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["sum"].get<double>() == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(j["verdict"] == "certified");
  }

  TEST_CASE("scan examples") {
    const auto ch1 = run("scan --family mocanu --n 2 --a 0.3 --functional ch1");
    CHECK(ch1.exit_code == 1);
    CHECK(contains(ch1.output, "verdict: violated"));
    CHECK(contains(ch1.output, "argmin: r="));

    const auto star = run("scan --family mocanu --n 2 --a 0.3 --functional starlike");
    CHECK(star.exit_code == 0);
    CHECK(contains(star.output, "inconclusive; not a proof"));

    const auto jac = run("scan --coeffs " + data("identity.json") + " --functional jacobian --json");
    CHECK(jac.exit_code == 0);
    const auto j = nlohmann::json::parse(jac.output);
    CHECK(j["min"].get<double>() == 1.0);
    CHECK(j["verdict"] == "passed");
  }

  TEST_CASE("flags override the config file") {
    const auto from_file = run("scan --coeffs " + data("identity.json") + " --functional ch1 --json --config " +
                               data("grid.json"));
    CHECK(nlohmann::json::parse(from_file.output)["samples"] == 256);
    const auto overridden = run("scan --coeffs " + data("identity.json") + " --functional ch1 --json --config " +
                                data("grid.json") + " --angles 64");
    CHECK(nlohmann::json::parse(overridden.output)["samples"] == 128);
  }

  TEST_CASE("scan CSV") {
    const auto path = scratch_dir() / "scan.csv";
    const auto r = run("scan --coeffs " + data("identity.json") + " --functional ch1 --radii 0.5 --angles 64 --csv " +
                       path.string());
    CHECK(r.exit_code == 0);
    const auto text = slurp(path);
    CHECK(text.rfind("r,theta,re,im,value\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 65);
  }

  TEST_CASE("threshold examples") {
    const auto plus = run("threshold --family C42b --b 1 --alpha 0");
    CHECK(plus.exit_code == 0);
    CHECK(contains(plus.output, "root_plus: 3\n"));

    const auto beta = run("threshold --family C42a --b 1 --alpha 0.25 --json");
    CHECK(beta.exit_code == 0);
    const auto j = nlohmann::json::parse(beta.output);
    CHECK(j["root_plus"].get<double>() == doctest::Approx(4.2808).epsilon(1e-4));
    CHECK(j["closed_form_residual"].get<double>() <= 1e-9);

    const auto degenerate = run("threshold --family C42a --b 1 --alpha 0.5");
    CHECK(degenerate.exit_code == 2);
    CHECK(contains(degenerate.output, "degenerate quadratic"));
  }

  TEST_CASE("render presets write files") {
    const auto dir = scratch_dir();
    const auto svg = dir / "fig2.svg";
    const auto csv = dir / "fig2.csv";
    const auto r = run("render --preset fig2 --svg " + svg.string() + " --csv " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "crossing"));
    CHECK(contains(slurp(svg), "class=\"crossing\""));
    CHECK(slurp(csv).rfind("r,theta,re,im\n", 0) == 0);

    const auto again = dir / "fig2_again.svg";
    CHECK(run("render --preset fig2 --svg " + again.string()).exit_code == 0);
    CHECK(slurp(svg) == slurp(again));

    CHECK(run("render --preset identity --svg /nonexistent-dir/out.svg").exit_code == 2);
    CHECK(run("render --preset identity --samples 128 --svg " + (dir / "x.svg").string()).exit_code == 2);
  }

  TEST_CASE("problem scan") {
    const auto empty = run("problem-scan --alpha-min 0.8 --alpha-max 0.7");
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.output, "exploratory"));
    const std::string header = "alpha,n,a,bound_ok,witness,theta_i,theta_j\n";
    CHECK(empty.output.substr(empty.output.size() - header.size()) == header);

    const auto one = run("problem-scan --alphas 1 --n 2");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "1,2,0.5,yes,yes,"));

    const auto low = run("problem-scan --alphas 0.67 --n 2");
    CHECK(contains(low.output, "0.67,2,"));
    CHECK(contains(low.output, ",yes,no,,\n"));
  }

  TEST_CASE("construct round-trips through certify") {
    const auto path = scratch_dir() / "mocanu.json";
    CHECK(run("construct --family mocanu --n 2 --a 0.3 --out " + path.string()).exit_code == 0);
    const auto r = run("certify --coeffs " + path.string());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "sum: 2.2"));
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("scan --family mocanu --n 2 --a 0.3 --functional nope").exit_code == 2);
    CHECK(run("scan --family mocanu --n 1 --a 0.3 --functional ch1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
  }
}
