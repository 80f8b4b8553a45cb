// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <entcap/error.hpp>

#include "commands.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitDecomposition = 4;
constexpr int kExitInternal = 70;

int exit_code(entcap::ErrorCode code) {
  using entcap::ErrorCode;
  switch (code) {
    case ErrorCode::kNotUnitary: return kExitNotUnitary;
    case ErrorCode::kDecomposition:
    case ErrorCode::kConvergence: return kExitDecomposition;
    default: return kExitUsage;
  }
}

// verify exits 1 on its own when a residual exceeds the threshold.
// One line, key=value, so scripts can split on spaces before message=.
int report(const std::string& kind, int code, std::string message) {
  for (char& c : message) {
    if (c == '\n' || c == '"') c = ' ';
  }
  std::cerr << "entcap: error=" << kind << " exit=" << code << " message=\"" << message << "\"\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace entcap::cli;

  CLI::App app{"Two-qubit unitary analysis: canonical decomposition, entangling capacities "
               "and distinguishability"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Master seed for random draws and oracle restarts");
  app.add_option("--tol", g.tol, "verify: pass threshold (default 1e-9); otherwise oracle tolerance");
  app.add_flag("--json", g.json, "Emit JSON instead of a table");
  app.add_option("--out", g.out, "Write the report to this path (verify: per-sample CSV)");
  app.add_flag("--degrees", g.degrees, "Print and read angles in degrees");
  app.add_option("--grid", g.grid, "Oracle grid points per angle");
  app.add_option("--restarts", g.restarts, "Oracle random restarts");
  app.add_option("--refine", g.refine, "Oracle refinement iterations");
  app.add_option("--search-tol", g.search_tol, "Oracle tolerance");
  app.add_option("--search-config", g.search_config, "Oracle settings as a JSON file");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one 4x4 unitary");
  analyze_cmd->add_option("input", analyze.input, "Matrix JSON file, or - for stdin")->required();
  analyze_cmd->add_flag("--numeric", analyze.numeric, "Add the brute-force oracle route");
  analyze_cmd->add_flag("--relations", analyze.relations, "Check both capacity relations");
  analyze_cmd->add_flag("--timings", analyze.timings, "Include wall-clock timings");

  std::string decompose_input;
  auto* decompose_cmd = app.add_subcommand("decompose", "Canonical decomposition only");
  decompose_cmd->add_option("input", decompose_input, "Matrix JSON file, or - for stdin")
      ->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Batch check of the capacity/distinguishability "
                                                  "identity over Haar samples");
  verify_cmd->add_option("--trials", verify.trials, "Number of Haar samples");
  verify_cmd->add_option("--routes", verify.routes, "Comma list of closed, geometric, numeric");
  verify_cmd->add_option("--numeric-tol", verify.numeric_tol, "Pass threshold for the oracle route");

  CapacitiesArgs capacities;
  auto* capacities_cmd = app.add_subcommand("capacities", "Closed forms and capacity relations");
  capacities_cmd->add_option("--d", capacities.d, "Weyl vector ax,ay,az");
  capacities_cmd->add_option("input", capacities.input, "Matrix JSON file, or - for stdin");

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "Draw Haar unitaries or Weyl vectors");
  random_cmd->add_flag("--weyl", random.weyl, "Uniform Weyl-chamber vectors");
  random_cmd->add_flag("--haar", random.haar, "Haar-random 4x4 unitaries (default)");
  random_cmd->add_option("--count", random.count, "Number of draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report("usage", kExitUsage, e.what());
  }

  try {
    if (*analyze_cmd) return cmd_analyze(g, analyze);
    if (*decompose_cmd) return cmd_decompose(g, decompose_input);
    if (*verify_cmd) return cmd_verify(g, verify);
    if (*capacities_cmd) return cmd_capacities(g, capacities);
    if (*random_cmd) return cmd_random(g, random);
  } catch (const entcap::Error& e) {
    return report(entcap::to_string(e.code()), exit_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return report("parse", kExitUsage, e.what());
  } catch (const std::exception& e) {
    return report("internal", kExitInternal, e.what());
  }
  return kExitUsage;
}
