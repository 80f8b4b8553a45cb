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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entcap/canonical.hpp"
#include "entcap/capacities.hpp"
#include "entcap/distinguishability.hpp"
#include "entcap/entanglement.hpp"
#include "entcap/json_io.hpp"
#include "entcap/oracle.hpp"

namespace entcap {

/// 64-bit FNV-1a over the row-major (re, im) doubles, as 16 hex digits.
std::string input_hash(const Eigen::MatrixXcd& m);

struct AnalysisOptions {
  DecomposeConfig decompose;
  /// Run the brute-force oracles for a third D_min / C_prod route.
  bool numeric = false;
  /// Run verify_relation1 and verify_relation2 on the canonical vector.
  bool relations = false;
  SearchConfig search;
};

struct DminRoutes {
  double closed = 0.0;
  double geometric = 0.0;
  std::optional<double> numeric;
};

struct AnalysisReport {
  std::string input_hash;
  CanonicalForm canonical;
  EigenPhases eigenphases;
  CapacityReport capacities;
  DminRoutes d_min;
  /// Quadratic and quartic residuals for the closed and geometric routes.
  TheoremCheck theorem;
  std::optional<double> c_max_prod_numeric;
  std::optional<TheoremResidual> numeric;
  HermiticityCheck hermiticity;
  std::optional<CapacityRelationReport> relation1;
  std::optional<CapacityRelationReport> relation2;
  std::optional<SearchConfig> search;
  std::map<std::string, double> timings_ms;
};

AnalysisReport analyze(const UnitaryMatrix& u, const AnalysisOptions& opts = {});

/// Timings are only emitted on request so that reports stay byte-stable.
Json report_to_json(const AnalysisReport& r, bool include_timings);

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  /// Threshold for the oracle route, which is limited by optimiser precision.
  double numeric_tol = 1e-3;
  bool closed = true;
  bool geometric = true;
  bool numeric = false;
  SearchConfig search;

  /// Throws kInvalidArgument for trials < 1, non-positive tolerances or no
  /// route selected.
  void validate() const;
};

struct VerifySample {
  int index = 0;
  WeylVector d;
  double decomposition_residual = 0.0;
  TheoremCheck theorem;
  std::optional<double> c_max_prod_numeric;
  std::optional<double> d_min_numeric;
  std::optional<double> residual_numeric;
  /// max of |oracle c - closed c| and |oracle d_min - closed d_min|.
  std::optional<double> oracle_deviation;
};

struct ResidualStats {
  double max = 0.0;
  double mean = 0.0;
  double threshold = 0.0;
  bool passed() const { return max <= threshold; }
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<VerifySample> samples;
  /// Keyed by route or route pair, e.g. "closed", "closed-geometric".
  std::map<std::string, ResidualStats> stats;
  bool passed = true;
};

/// Sample i is drawn from its own generator seeded by (seed, i); samples are
/// merged in index order.
VerifySummary verify_batch(const VerifyOptions& opts);

std::string verify_csv(const VerifySummary& s);
Json summary_to_json(const VerifySummary& s);

}  // namespace entcap
