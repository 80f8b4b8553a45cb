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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace entcap {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  int max_iterations = 200;
  /// Converged when the simplex values agree to f_tol and its vertices lie
  /// within x_tol of the best one.
  double f_tol = 1e-14;
  double x_tol = 1e-7;
  double initial_step = 0.1;
  /// Fresh simplices built around the incumbent after convergence.
  int restarts = 2;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
};

/// Minimises f from x0. Never returns a point worse than x0.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {});

/// Calls fn(i) for i in [0, n) across hardware threads. Each index is handled
/// exactly once; the first exception thrown is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace entcap
