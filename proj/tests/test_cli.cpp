// Copyright 2026 The kred authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      (env.empty() ? "" : "env " + env + " ") + std::string(KRED_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  const int status = pclose(pipe);
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("kseries text output") {
  const auto r = run_cli("kseries -p 23 -n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("X^0\t-1") != std::string::npos);
  CHECK(r.output.find("X^5\t-572") != std::string::npos);
  CHECK(r.output.find("X^6\t-4224") != std::string::npos);
}

TEST_CASE("kseries csv output") {
  const auto r = run_cli("kseries -p 5 -n 6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("index,exponent,coefficient\n", 0) == 0);
  CHECK(r.output.find("1,1,2\n") != std::string::npos);
  CHECK(r.output.find("3,3,1\n") != std::string::npos);
}

TEST_CASE("invalid p exits with code 2") {
  const auto r = run_cli("kseries -p 9 -n 5");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("p must be an odd prime") != std::string::npos);
  CHECK(run_cli("reduce --theory complex -p 2 -n 4").exit_code == 2);
  CHECK(run_cli("kseries -p x -n 4").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("json envelope round-trips byte-identically and is deterministic") {
  const auto first = run_cli("reduce --theory complex -p 7 -n 28 --format json");
  REQUIRE(first.exit_code == 0);
  const json parsed = json::parse(first.output);
  CHECK(parsed.dump(2) + "\n" == first.output);

  // Big integers ride as strings.
  CHECK(parsed["p"] == "7");
  CHECK(parsed["offset"] == 7);
  CHECK(parsed["payload"]["coefficients"][0] == "-1");
  CHECK(parsed["payload"]["coefficients"][16] == "2");
  CHECK(parsed["payload"]["balanced_len"] == 28);

  const auto second = run_cli("reduce --theory complex -p 7 -n 28 --format json");
  json a = json::parse(first.output);
  json b = json::parse(second.output);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);
}

TEST_CASE("mseries and reduce real") {
  const auto r = run_cli("mseries -p 3 -n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("X^0\t-1") != std::string::npos);
  CHECK(r.output.find("X^1\t0") != std::string::npos);

  const auto red = run_cli("reduce --theory real -p 23 -n 4 --format csv");
  CHECK(red.exit_code == 0);
  CHECK(red.output.find("0,12,-1\n") != std::string::npos);
  CHECK(red.output.find("2,14,4\n") != std::string::npos);
  CHECK(red.output.find("3,15,1\n") != std::string::npos);
}

TEST_CASE("reduce state file resume is byte-identical") {
  const fs::path state = fs::temp_directory_path() / "kred_cli_test.state";
  fs::remove(state);
  const auto first = run_cli("reduce --theory complex -p 7 -n 200 --state " + state.string() +
                             " --format json");
  REQUIRE(first.exit_code == 0);
  REQUIRE(fs::exists(state));
  const auto second = run_cli("reduce --theory complex -p 7 -n 200 --state " + state.string() +
                              " --format json");
  CHECK(second.exit_code == 0);
  json a = json::parse(first.output);
  json b = json::parse(second.output);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);

  // Tampering trips the digest check: exit 3.
  std::string text;
  {
    std::FILE* f = std::fopen(state.c_str(), "rb");
    REQUIRE(f);
    std::array<char, 8192> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), got);
    std::fclose(f);
  }
  const auto pos = text.find("-1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 2, "-2");
  {
    std::FILE* f = std::fopen(state.c_str(), "wb");
    REQUIRE(f);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const auto tampered = run_cli("reduce --theory complex -p 7 -n 200 --state " + state.string());
  CHECK(tampered.exit_code == 3);
  fs::remove(state);
}

TEST_CASE("formula command") {
  const auto r = run_cli("formula --theory real -n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-(p^2-1)(7p^2 + 17)/5760") != std::string::npos);

  const auto j = run_cli("formula --theory complex -n 4 --format json");
  const json parsed = json::parse(j.output);
  CHECK(parsed["payload"]["display"] == "(p^2-1)(p^2 - 19)/720");
  CHECK(parsed["payload"]["min_valid_p"] == 6);
}

TEST_CASE("bernoulli command") {
  const auto r = run_cli("bernoulli -n 4 --check");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-1/30") != std::string::npos);
  CHECK(r.output.find("MATCH") != std::string::npos);

  const auto j = run_cli("bernoulli -n 12 --format json");
  const json parsed = json::parse(j.output);
  CHECK(parsed["payload"]["value"] == "-691/2730");
}

TEST_CASE("period command") {
  const auto r = run_cli("period --theory complex -p 5 --max-terms 100");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FOUND") != std::string::npos);
  CHECK(r.output.find("period=6") != std::string::npos);
  CHECK(r.output.find("certificate=PROVED") != std::string::npos);

  const auto nf = run_cli("period --theory complex -p 7 --max-terms 28");
  CHECK(nf.exit_code == 0);
  CHECK(nf.output.find("NOT_FOUND") != std::string::npos);
  CHECK(nf.output.find("aperiodic") == std::string::npos);

  const auto multi = run_cli("period --theory real -p 3 -p 5 --max-terms 100 --format json");
  const json parsed = json::parse(multi.output);
  CHECK(parsed["payload"]["reports"].size() == 2);
  CHECK(parsed["payload"]["reports"][0]["certificate"] == "PROVED");
  CHECK(parsed["payload"]["reports"][1]["period"] == 2);
}

TEST_CASE("realification command") {
  const auto r = run_cli("realification -p 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("EXACT-CLOSED-FORM") != std::string::npos);
}

TEST_CASE("kseries json round-trips byte-identically") {
  const auto r = run_cli("kseries -p 23 -n 7 --format json");
  REQUIRE(r.exit_code == 0);
  const json parsed = json::parse(r.output);
  CHECK(parsed.dump(2) + "\n" == r.output);
  CHECK(parsed["payload"]["coefficients"][6] == "-4224");
  CHECK(parsed["offset"] == 0);
}

TEST_CASE("KRED_STATE_DIR provides the default state location") {
  const fs::path dir = fs::temp_directory_path() / "kred_cli_state_dir";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto r = run_cli("period --theory complex -p 5 --max-terms 100",
                         "KRED_STATE_DIR=" + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "kred_complex_p5_self.state"));
  // Second run resumes from the file without changing the report.
  const auto again = run_cli("period --theory complex -p 5 --max-terms 100",
                             "KRED_STATE_DIR=" + dir.string());
  CHECK(again.output == r.output);
  fs::remove_all(dir);
}

TEST_CASE("verify-paper reports the published-value status table") {
  const auto r = run_cli("verify-paper");
  // The published tables contain internal inconsistencies, so the overall
  // verification honestly reports failures (exit 1) plus typo findings.
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("SUSPECTED-PAPER-TYPO") != std::string::npos);
  CHECK(r.output.find("[PASS] k-series p=3, 6 terms") != std::string::npos);
  CHECK(r.output.find("[PASS] prefix congruences") != std::string::npos);
  CHECK(r.output.find("[PASS] periods with certificates") != std::string::npos);
  CHECK(r.output.find("[FAIL] k-series p=23") != std::string::npos);
  CHECK(r.output.find("Bernoulli") != std::string::npos);
}
