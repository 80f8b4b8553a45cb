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

#include <array>

#include "entcap/linalg.hpp"

namespace entcap {

/// Nonlocal parameters (alpha_x, alpha_y, alpha_z) of a two-qubit gate.
/// Inside the chamber 0 <= |alpha_z| <= alpha_y <= alpha_x <= pi/4.
struct WeylVector {
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double alpha_z = 0.0;

  std::array<double, 3> as_array() const { return {alpha_x, alpha_y, alpha_z}; }
  bool operator==(const WeylVector&) const = default;
};

bool in_weyl_chamber(const WeylVector& d, double tol = 1e-12);

/// lambda_1 <= lambda_2 <= lambda_3 <= lambda_4 (sorted); U_d has eigenvalues
/// exp(-i lambda_j).
struct EigenPhases {
  double lambda_1 = 0.0;
  double lambda_2 = 0.0;
  double lambda_3 = 0.0;
  double lambda_4 = 0.0;

  std::array<double, 4> as_array() const {
    return {lambda_1, lambda_2, lambda_3, lambda_4};
  }
};

/// The four lambdas in formula order:
///   [0] = -ax - ay - az, [1] = -ax + ay + az,
///   [2] =  ax - ay + az, [3] =  ax + ay - az.
std::array<double, 4> lambdas(const WeylVector& d);

/// Sorted version of lambdas(d).
EigenPhases eigenphases(const WeylVector& d);

/// Columns (|00>+|11>)/sqrt2, i(|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2,
/// i(|00>-|11>)/sqrt2. Local SU(2)xSU(2) maps to SO(4) in this basis and the
/// sigma(x)sigma generators are diagonal.
const Matrix4& magic_basis();

/// exp(-i(ax XX + ay YY + az ZZ)), assembled in the magic basis. Any real
/// triple is accepted.
Matrix4 canonical_unitary(const WeylVector& d);

struct CanonicalForm {
  Matrix2 xa = Matrix2::Identity();
  Matrix2 xb = Matrix2::Identity();
  Matrix2 ya = Matrix2::Identity();
  Matrix2 yb = Matrix2::Identity();
  WeylVector d;
  double global_phase = 0.0;
  /// max-norm distance between the input and reconstruct().
  double residual = 0.0;

  /// e^{i phase} (XA (x) XB) U_d (YA (x) YB)
  Matrix4 reconstruct() const;
};

struct DecomposeConfig {
  double unitarity_tol = kUnitarityTol;
  double cluster_tol = 1e-8;
  double reconstruction_tol = 1e-9;
};

/// KAK decomposition U = e^{i phi} (XA (x) XB) U_d (YA (x) YB) with d in the
/// Weyl chamber. Local factors are returned in SU(2).
///
/// Throws kNotUnitary for non-unitary input and kDecomposition when the
/// reconstruction residual exceeds cfg.reconstruction_tol.
CanonicalForm cartan_decompose(const Matrix4& u, const DecomposeConfig& cfg = {});
CanonicalForm cartan_decompose(const UnitaryMatrix& u,
                               const DecomposeConfig& cfg = {});

struct WeylReductionResult {
  WeylVector d;
  /// True when a local conjugation move (coordinate permutation or pairwise
  /// sign flip) was needed; pure pi/2 shifts leave it false.
  bool conjugated = false;
};

/// Full record of a reduction: U_d(raw) = e^{i phase} (LA (x) LB) U_d(d)
/// (RA (x) RB).
struct WeylReduction {
  WeylVector d;
  bool conjugated = false;
  Matrix2 la = Matrix2::Identity();
  Matrix2 lb = Matrix2::Identity();
  Matrix2 ra = Matrix2::Identity();
  Matrix2 rb = Matrix2::Identity();
  double phase = 0.0;
};

/// Moves are applied in a fixed order: wrap each coordinate into
/// (-pi/4, pi/4] by pi/2 shifts, order by |alpha| with permutations, then
/// pairwise sign flips until alpha_x, alpha_y >= 0. alpha_z may stay negative.
WeylReductionResult reduce_to_weyl(const std::array<double, 3>& raw);
WeylReduction reduce_to_weyl_tracked(const std::array<double, 3>& raw);

struct MirrorResult {
  WeylVector d;
  /// False when alpha_z was already non-negative (no-op).
  bool mirrored = false;
};

/// (ax, ay, az) -> (ax, ay, -az) for az < 0. (Z (x) 1) U_d (Z (x) 1) equals
/// U_{d'}^dagger, so capacities and D_min carry over unchanged.
MirrorResult mirror_negative_alpha_z(const WeylVector& d);

/// Mirrors when alpha_z < 0, otherwise returns d unchanged.
WeylVector nonnegative_alpha_z(const WeylVector& d);

/// Sorted multiset {|sin(lambda_j - lambda_k)| : j < k}. Equal for locally
/// equivalent canonical gates.
std::array<double, 6> sine_invariants(const WeylVector& d);

/// Uniform sample from the chamber (including alpha_z < 0).
WeylVector random_weyl_vector(Rng& rng);

}  // namespace entcap
