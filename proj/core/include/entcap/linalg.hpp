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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace entcap {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector4 = Eigen::Vector4cd;

/// The only source of randomness in the library. Always passed explicitly.
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
}  // namespace pauli

/// Largest entry modulus.
double max_abs(const Eigen::MatrixXcd& m);

/// max |(U^dagger U - I)_ij|; +inf for non-square input.
double unitarity_error(const Eigen::MatrixXcd& m);

/// Maps an angle into (-pi, pi].
double wrap_phase(double angle);

/// A 2x2 or 4x4 complex matrix that passed a unitarity check on
/// construction. Immutable.
class UnitaryMatrix {
 public:
  /// Throws kDimensionMismatch unless dim is 2 or 4, kNonFinite on NaN/Inf,
  /// kNotUnitary when ||U^dagger U - I||_max > tol.
  static UnitaryMatrix checked(Eigen::MatrixXcd m, double tol = kUnitarityTol);

  UnitaryMatrix(const Matrix2& m);  // NOLINT: implicit on purpose
  UnitaryMatrix(const Matrix4& m);  // NOLINT

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Matrix2 as2() const;
  Matrix4 as4() const;
  UnitaryMatrix adjoint() const;

 private:
  explicit UnitaryMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  Eigen::MatrixXcd m_;
};

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Kronecker product with entry (2a+c, 2b+d) = A[a,b] B[c,d]. Both factors
/// must be 2x2.
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);
Matrix4 kron(const Matrix2& a, const Matrix2& b);
Vector4 kron(const Vector2& a, const Vector2& b);

/// A normalised state vector of dimension 2 or 4.
class PureState {
 public:
  static PureState checked(Eigen::VectorXcd amplitudes, double tol = kNormTol);
  /// Rescales to unit norm; throws on the zero vector.
  static PureState normalized(Eigen::VectorXcd amplitudes);

  PureState(const Vector2& v);  // NOLINT: checked
  PureState(const Vector4& v);  // NOLINT: checked

  int dim() const { return static_cast<int>(v_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return v_; }
  Vector2 as2() const;
  Vector4 as4() const;

 private:
  explicit PureState(Eigen::VectorXcd v) : v_(std::move(v)) {}
  Eigen::VectorXcd v_;
};

PureState kron(const PureState& a, const PureState& b);

struct SpectralDecomposition {
  /// Eigenphases in (-pi, pi], ascending.
  std::vector<double> phases;
  /// Column j is the eigenvector for phases[j].
  Eigen::MatrixXcd eigenvectors;

  Eigen::MatrixXcd reconstruct() const;
};

struct EigConfig {
  double unitarity_tol = kUnitarityTol;
  double cluster_tol = 1e-8;
  double reconstruction_tol = 1e-9;
};

/// Eigendecomposition of a unitary via the commuting Hermitian pair
/// (U + U^dagger)/2 and (U - U^dagger)/2i, diagonalised jointly so that
/// degenerate eigenspaces still get an orthonormal basis.
SpectralDecomposition eig_unitary(const UnitaryMatrix& u,
                                  const EigConfig& cfg = {});
SpectralDecomposition eig_unitary(const Eigen::MatrixXcd& u,
                                  const EigConfig& cfg = {});

/// Orthonormal basis diagonalising two commuting self-adjoint matrices.
/// Throws kConvergence if no basis reaching `check_tol` is found.
Eigen::MatrixXcd joint_eigenbasis(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b, double cluster_tol,
                                  double check_tol = 1e-10);
Eigen::Matrix4d joint_eigenbasis(const Eigen::Matrix4d& a,
                                 const Eigen::Matrix4d& b, double cluster_tol,
                                 double check_tol = 1e-10);

/// Haar-distributed unitary: Ginibre matrix, QR, then the phases of diag(R)
/// are divided out so the distribution is exactly invariant.
UnitaryMatrix haar_random_unitary(int dim, Rng& rng);
Matrix2 haar_random2(Rng& rng);
Matrix4 haar_random4(Rng& rng);

/// Uniform on the unit sphere of C^dim.
PureState random_pure_state(int dim, Rng& rng);
/// Kronecker product of two independent uniform single-qubit states.
PureState random_product_state(Rng& rng);

}  // namespace entcap
