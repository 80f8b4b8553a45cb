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

#include "entcap/canonical.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0. Inputs within 1e-12
/// outside [0, 1] are clamped; anything further out throws kOutOfRange.
double binary_entropy(double x);

/// C = 2 sqrt(det rho_A), rho_A = Tr_B |psi><psi|.
double concurrence(const PureState& psi);
/// Same, for a unit-norm 4-vector (throws kNotNormalized otherwise).
double concurrence(const Vector4& psi);

/// |<psi| sigma_y (x) sigma_y |psi*>|, conjugation in the computational
/// basis.
double concurrence_conjugate_form(const PureState& psi);

/// -sum q log2 q over the eigenvalues of rho_A.
double entropy_of_entanglement(const PureState& psi);

/// h((1 + sqrt(1 - c^2)) / 2).
double entropy_from_concurrence(double c);

struct EntanglementValue {
  double concurrence = 0.0;
  double entropy = 0.0;
};

EntanglementValue entanglement(const PureState& psi);

/// Slack used on the perfect-entangler inequalities so that boundary points
/// reached through round-off still count as satisfied.
inline constexpr double kBoundarySlack = 1e-12;

/// ax + ay >= pi/4 and ay + az <= pi/4. Requires az >= 0 (kInvalidArgument
/// otherwise; mirror first).
bool is_perfect_entangler(const WeylVector& d);

struct CapacityReport {
  double c_max_prod = 0.0;
  double c_max = 0.0;
  double e_max_prod = 0.0;
  bool perfect_entangler = false;
};

/// Product and general concurrence capacities plus the product entropic
/// capacity. Negative alpha_z is mirrored first.
CapacityReport capacities_closed_form(const WeylVector& d);

}  // namespace entcap
