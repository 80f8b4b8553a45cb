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
#include <span>

#include "entcap/linalg.hpp"

namespace entcap {

/// Brute-force search settings shared by every oracle. Angle grids are rounded
/// up so that multiples of pi/4 are always grid points.
struct SearchConfig {
  int coarse_grid_per_angle = 24;
  int restarts = 32;
  int refine_iterations = 200;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;

  /// Throws kInvalidArgument unless every field is positive.
  void validate() const;
};

struct ProductFactors {
  PureState a;
  PureState b;
};

struct SearchResult {
  double value = 0.0;
  PureState argmax_state;
  long evaluations = 0;
  /// Set by the product-state searches.
  std::optional<ProductFactors> factors;
};

/// max over |a>|b> of C(U |a>|b>), each qubit parametrised by
/// (polar, azimuth).
SearchResult max_concurrence_product(const Matrix4& u, const SearchConfig& cfg);
/// min over |a>|b> of C(U |a>|b>).
SearchResult min_concurrence_product(const Matrix4& u, const SearchConfig& cfg);

/// max over all |psi> of C(U|psi>) - C(|psi>), over the six real parameters
/// of a two-qubit pure state modulo norm and global phase. The product-state
/// optimum is one of the refinement starts, so the value never falls below
/// max_concurrence_product.
SearchResult max_delta_concurrence(const Matrix4& u, const SearchConfig& cfg);

struct ProbeSearchResult {
  /// Exact vertex/chord/triangle scan over the probability simplex, with the
  /// probe assembled from V's eigenvectors.
  SearchResult exact;
  /// Grid plus Nelder-Mead search directly over probe states.
  SearchResult direct;
  /// Optimal weights on V's eigenvectors (phase order of eig_unitary).
  std::vector<double> weights;
};

/// min over unit |phi> of |<phi|V|phi>|, by two independent routes.
ProbeSearchResult min_probe_overlap(const UnitaryMatrix& v,
                                    const SearchConfig& cfg);

/// min over probability vectors p of |sum_j p_j e^{i theta_j}|. The optimum
/// sits on a vertex, a chord or (value 0) inside a triangle of the points, so
/// all of those are scanned exactly. Writes the minimising p when requested.
double simplex_min_modulus(std::span<const double> phases,
                           std::vector<double>* weights = nullptr);

}  // namespace entcap
