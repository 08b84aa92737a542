// Copyright 2026 The Oloid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests driving the installed binary as a subprocess.
// OLOID_CLI_PATH is injected by the build.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(OLOID_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, VersionAndHelp) {
  const RunResult version = run_cli("--version");
  EXPECT_EQ(version.exit_code, 0);
  EXPECT_TRUE(contains(version.output, "0.1.0")) << version.output;

  const RunResult help = run_cli("--help");
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_TRUE(contains(help.output, "props")) << help.output;
  EXPECT_TRUE(contains(help.output, "verify")) << help.output;
  EXPECT_TRUE(contains(help.output, "mesh")) << help.output;
}

TEST(Cli, PropsClosedFormJson) {
  const RunResult r = run_cli("props --method closed_form --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "\"tool\": \"oloid\"")) << r.output;
  EXPECT_TRUE(contains(r.output, "\"volume\": 3.0524184684243747"))
      << r.output;
  EXPECT_TRUE(contains(r.output, "\"closed_form\"")) << r.output;
  EXPECT_FALSE(contains(r.output, "std_error")) << r.output;
}

TEST(Cli, PropsClosedFormText) {
  const RunResult r = run_cli("props --method closed_form");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "[closed_form]")) << r.output;
  EXPECT_TRUE(contains(r.output, "0.76535025749314")) << r.output;
  EXPECT_TRUE(contains(r.output, "1.4555128734692")) << r.output;
}

TEST(Cli, PropsMonteCarloReportsStandardErrors) {
  const RunResult r = run_cli(
      "props --method monte_carlo --mc-samples 200000 --seed 7 --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "\"monte_carlo\"")) << r.output;
  EXPECT_TRUE(contains(r.output, "\"std_error\"")) << r.output;
}

TEST(Cli, JsonReportIsByteStable) {
  const std::string args =
      "props --json --mc-samples 100000 --seed 42 --nm 32 --nt 64";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  ASSERT_EQ(a.exit_code, 0);
  ASSERT_EQ(b.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);                          // no subcommand
  EXPECT_EQ(run_cli("props --radius 0").exit_code, 2);          // non-positive
  EXPECT_EQ(run_cli("props --radius -3").exit_code, 2);
  EXPECT_EQ(run_cli("props --method bogus").exit_code, 2);      // bad member
  EXPECT_EQ(run_cli("mesh").exit_code, 2);                      // missing -o
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);                // bad command
}

TEST(Cli, DomainErrorsFromCoreExitTwo) {
  const auto tmp =
      (std::filesystem::temp_directory_path() / "oloid_cli_bad.stl").string();
  const RunResult r = run_cli("mesh --nt 5 -o " + tmp);  // odd nt rejected
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.output, "invalid input")) << r.output;
}

TEST(Cli, ComputationalFailureExitsOne) {
  const auto tmp = "/nonexistent_dir_zz/oloid_cli.stl";
  const RunResult r = run_cli(std::string("mesh --nm 2 --nt 4 -o ") + tmp);
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, MeshExportStl) {
  const auto tmp =
      (std::filesystem::temp_directory_path() / "oloid_cli_out.stl").string();
  const RunResult r = run_cli("mesh --nm 4 --nt 8 --format stl -o " + tmp);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "watertight=true")) << r.output;
  EXPECT_TRUE(contains(r.output, "triangles=128")) << r.output;
  // 84-byte preamble plus fifty bytes per triangle.
  EXPECT_TRUE(contains(r.output, "bytes=6484")) << r.output;
  EXPECT_EQ(std::filesystem::file_size(tmp), 6484u);
  std::filesystem::remove(tmp);
}

TEST(Cli, MeshExportObj) {
  const auto tmp =
      (std::filesystem::temp_directory_path() / "oloid_cli_out.obj").string();
  const RunResult r = run_cli("mesh --nm 2 --nt 4 --format obj -o " + tmp);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_GT(std::filesystem::file_size(tmp), 0u);
  std::filesystem::remove(tmp);
}

// The verify thresholds are calibrated for the default mesh grid, so these
// run at the defaults and trim only the Monte Carlo side.

TEST(Cli, VerifyPassesWithModerateSampleCount) {
  const RunResult r = run_cli("verify --mc-samples 100000");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "all checks passed")) << r.output;
  EXPECT_TRUE(contains(r.output, "closed_form_constants")) << r.output;
  EXPECT_FALSE(contains(r.output, "FAIL")) << r.output;
}

TEST(Cli, VerifyLowSampleCountSkipsMcChecks) {
  const RunResult r = run_cli("verify --mc-samples 1000");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "SKIP")) << r.output;
  EXPECT_TRUE(contains(r.output, "all checks passed")) << r.output;
}

TEST(Cli, VerifyInjectedErrorFails) {
  const RunResult r =
      run_cli("verify --inject-constant-error --mc-samples 1000");
  EXPECT_EQ(r.exit_code, 1) << r.output;
  EXPECT_TRUE(contains(r.output, "FAIL")) << r.output;
  EXPECT_TRUE(contains(r.output, "closed_form_constants")) << r.output;
}

TEST(Cli, VerifyJsonSummary) {
  const RunResult r = run_cli("verify --json --mc-samples 1000");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "\"all_pass\": true")) << r.output;
  EXPECT_TRUE(contains(r.output, "\"status\": \"skip\"")) << r.output;
}

}  // namespace
