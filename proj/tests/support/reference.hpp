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

// Test-only reference implementations. Each one avoids the code path it is
// used to check: no magic basis, no gap scan, no closed-form shortcuts.

#include <array>
#include <span>

#include <entcap/canonical.hpp>
#include <entcap/linalg.hpp>

namespace entcap::ref {

/// exp(-i(ax XX + ay YY + az ZZ)) as the product of three commuting
/// exponentials cos(a) I - i sin(a) PP.
Matrix4 canonical_unitary_pauli(const WeylVector& d);

/// 2 sqrt(det rho_A) with rho_A formed by an explicit partial trace.
double concurrence_partial_trace(const Vector4& psi);

/// -sum q log2 q from a self-adjoint eigensolver on rho_A.
double entropy_partial_trace(const Vector4& psi);

double binary_entropy(double x);

/// Kraus-Cirac value read directly off the two inequalities and the max
/// over all |sin(lambda_j - lambda_k)|, using |alpha_z|.
double c_max_prod(const WeylVector& d);

/// max over pure |psi> of C(U psi) - C(psi) by multistart compass search on
/// the raw 8 real amplitude coordinates.
double max_delta_concurrence_bruteforce(const Matrix4& u, int starts, int steps, Rng& rng);

/// Distance from 0 to conv{e^{i theta}}: 0 if some triangle (or chord or
/// point) contains the origin, else the minimum over all chords and points.
double hull_distance_bruteforce(std::span<const double> phases);

/// max over entries of |a - b|.
double distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// min over global phases of max |a - e^{i phi} b|, aligned on the largest
/// entry.
double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

bool all_finite(const Eigen::MatrixXcd& m);

}  // namespace entcap::ref
