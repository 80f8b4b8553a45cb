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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <entcap/oracle.hpp>

namespace entcap::cli {

struct GlobalOptions {
  std::uint64_t seed = 0;
  /// Pass threshold for verify; oracle tolerance elsewhere.
  std::optional<double> tol;
  bool json = false;
  std::string out;
  bool degrees = false;
  std::optional<int> grid;
  std::optional<int> restarts;
  std::optional<int> refine;
  std::optional<double> search_tol;
  std::string search_config;
};

struct AnalyzeArgs {
  std::string input;
  bool numeric = false;
  bool relations = false;
  bool timings = false;
};

struct VerifyArgs {
  int trials = 100;
  std::string routes = "closed,geometric";
  double numeric_tol = 1e-3;
};

struct CapacitiesArgs {
  std::string d;
  std::string input;
};

struct RandomArgs {
  bool weyl = false;
  bool haar = false;
  int count = 1;
};

/// Defaults, then a --search-config JSON file, then individual flags.
SearchConfig search_config(const GlobalOptions& g, bool tol_is_search_tol);

int cmd_analyze(const GlobalOptions& g, const AnalyzeArgs& a);
int cmd_decompose(const GlobalOptions& g, const std::string& input);
int cmd_verify(const GlobalOptions& g, const VerifyArgs& a);
int cmd_capacities(const GlobalOptions& g, const CapacitiesArgs& a);
int cmd_random(const GlobalOptions& g, const RandomArgs& a);

}  // namespace entcap::cli
