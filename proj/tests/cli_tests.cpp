#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SYLLOG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints the deductions, name, and bounds") {
  CliResult r = run_cli("solve 2 e i");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Premises: BeA, BiC (figure 2)"));
  CHECK(contains(r.output, "Classical: {o}"));
  CHECK(contains(r.output, "eio-2 (Festino)"));
  CHECK(contains(r.output, "Complementary: (none)"));
  CHECK(contains(r.output, "\xCE\xB1" "2 = 1/100"));  // α2
  CHECK(contains(r.output, "\xCE\xB2" "2 = 1/1"));    // β2
}

TEST_CASE("explain shows the constraints and solved programs") {
  CliResult r = run_cli("explain 2 e i");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "x1 + x2 = 0"));
  CHECK(contains(r.output, "x1 + x5 >= 1/100"));
  CHECK(contains(r.output, "min P(C,~A) = x5 + x7  ->  1/100"));
  CHECK(contains(r.output, "max P(C,~A) = x5 + x7  ->  1/1"));
  CHECK(contains(r.output, "AoC"));
}

TEST_CASE("deduce handles arbitrary premises and queries") {
  CliResult r = run_cli("deduce -p BeA -p BiC -q A?C");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Classical (C): {o}"));

  CliResult swapped = run_cli("deduce -p BiC -p BeA -q A?C");
  CHECK(swapped.exit_code == 0);
  CHECK(contains(swapped.output, "Classical (C): {o}"));
}

TEST_CASE("inconsistent premises exit with the infeasible code") {
  CliResult r = run_cli("deduce -p AoA -q A?B");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "INFEASIBLE"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("solve 2 x i").exit_code == 1);
  CHECK(run_cli("solve 9 e i").exit_code == 1);
  CHECK(run_cli("deduce -q A?C -p \"A^B\"").exit_code == 1);
  CHECK(run_cli("deduce -p AaB").exit_code == 1);  // missing query
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("selftest reports a full match") {
  CliResult r = run_cli("selftest --jobs 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "196/196 problems match"));
  CHECK(contains(r.output, "0 cells changed"));
}

TEST_CASE("enumerate --format csv has the documented schema") {
  CliResult r = run_cli("enumerate --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("figure,kind,major,minor,deductions\n", 0) == 0);
  CHECK(contains(r.output, "\n1,classical,e,\xC3\xA1,\"\xC3\xA9;e;o\"\n"));
  CHECK(contains(r.output, "\n1,complementary,a,a,\"\"\n"));
  // 196 problems, one classical and one complementary row each, plus header.
  std::size_t lines = 0;
  for (char c : r.output) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 1 + 2 * 196);
}

TEST_CASE("enumerate --format json round-trips byte-identically") {
  CliResult r = run_cli("enumerate --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.output);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 196);
  std::string reserialized = parsed.dump(2) + "\n";
  CHECK(reserialized == r.output);

  const nlohmann::json& first = parsed[0];
  CHECK(first.at("figure") == 1);
  CHECK(first.at("major") == "a");
  CHECK(first.at("minor") == "a");
  CHECK(first.at("feasible") == true);
  CHECK(first.at("classical") == nlohmann::json::array({"a"}));
  CHECK(first.at("alpha").size() == 4);
  CHECK(first.at("beta").size() == 4);
  // Exact rationals rendered as fractions.
  CHECK(first.at("alpha")[0].get<std::string>().find('/') !=
        std::string::npos);
}

TEST_CASE("enumerate text grids match the published cells") {
  CliResult r = run_cli("enumerate");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.output, "Figure 1 (classical, A?C)"));
  CHECK(contains(r.output, "Figure 4 (complementary, A?~C)"));
  CHECK(contains(r.output, "\xC3\xA1, a, i"));  // á, a, i
  CHECK(contains(r.output, "\xC3\xA9, e, o"));  // é, e, o
}
