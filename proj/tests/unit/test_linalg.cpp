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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <entcap/error.hpp>
#include <entcap/linalg.hpp>

#include "reference.hpp"
#include "test_util.hpp"

using namespace entcap;
using Catch::Matchers::WithinAbs;

using test::code_of;

TEST_CASE("Pauli products", "[linalg]") {
  const Complex i(0, 1);
  CHECK(ref::distance(pauli::x() * pauli::y(), i * pauli::z()) == 0.0);
  CHECK(ref::distance(pauli::y() * pauli::z(), i * pauli::x()) == 0.0);
  CHECK(ref::distance(pauli::z() * pauli::x(), i * pauli::y()) == 0.0);
  for (const Matrix2& p : {pauli::x(), pauli::y(), pauli::z()}) {
    CHECK(ref::distance(p * p, pauli::identity()) == 0.0);
  }
}

TEST_CASE("kron index convention", "[linalg]") {
  Rng rng(11);
  const Matrix2 a = haar_random2(rng);
  const Matrix2 b = haar_random2(rng);
  const Matrix4 k = kron(a, b);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(k(r, c) == a(r / 2, c / 2) * b(r % 2, c % 2));
  const Vector2 u(1, 0), v(0, 1);
  CHECK(kron(u, v)(1) == Complex(1, 0));
}

TEST_CASE("UnitaryMatrix validation", "[linalg]") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  CHECK_NOTHROW(UnitaryMatrix::checked(m));
  m(0, 0) = 1.001;
  CHECK(code_of([&] { UnitaryMatrix::checked(m); }) == ErrorCode::kNotUnitary);
  CHECK(code_of([&] { UnitaryMatrix::checked(Eigen::MatrixXcd::Identity(3, 3)); }) ==
        ErrorCode::kDimensionMismatch);
  m(0, 0) = std::nan("");
  CHECK(code_of([&] { UnitaryMatrix::checked(m); }) == ErrorCode::kNonFinite);
  CHECK(std::isinf(unitarity_error(Eigen::MatrixXcd::Zero(2, 3))));
}

TEST_CASE("PureState validation", "[linalg]") {
  CHECK_NOTHROW(PureState(Vector2(1, 0)));
  CHECK(code_of([] { PureState(Vector2(1.1, 0)); }) == ErrorCode::kNotNormalized);
  CHECK_THROWS_AS(PureState::normalized(Eigen::VectorXcd::Zero(4)), Error);
  const PureState s = PureState::normalized(Eigen::Vector4cd(1, 1, 1, 1));
  CHECK_THAT(s.amplitudes().norm(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("wrap_phase range", "[linalg]") {
  CHECK(wrap_phase(kPi) == kPi);
  CHECK_THAT(wrap_phase(-kPi), WithinAbs(kPi, 1e-15));
  CHECK_THAT(wrap_phase(3 * kPi), WithinAbs(kPi, 1e-14));
  CHECK_THAT(wrap_phase(0.5 + 4 * kPi), WithinAbs(0.5, 1e-14));
}

TEST_CASE("Haar sampling is unitary and seed-deterministic", "[linalg]") {
  Rng a(5), b(5);
  for (int k = 0; k < 50; ++k) {
    const UnitaryMatrix u = haar_random_unitary(4, a);
    CHECK(unitarity_error(u.matrix()) < 1e-13);
    CHECK(ref::distance(u.matrix(), haar_random_unitary(4, b).matrix()) == 0.0);
  }
  // E|U_00|^2 = 1/4 for Haar measure.
  Rng rng(6);
  double mean = 0.0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) mean += std::norm(haar_random4(rng)(0, 0)) / n;
  CHECK_THAT(mean, WithinAbs(0.25, 0.01));
}

TEST_CASE("eig_unitary reconstructs, including degenerate spectra", "[linalg]") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const UnitaryMatrix u = haar_random_unitary(4, rng);
    const SpectralDecomposition s = eig_unitary(u);
    CHECK(ref::distance(s.reconstruct(), u.matrix()) < 1e-10);
    CHECK(std::is_sorted(s.phases.begin(), s.phases.end()));
  }
  for (int k = 0; k < 20; ++k) {
    const Matrix4 w = haar_random4(rng);
    Matrix4 diag = Matrix4::Zero();
    diag.diagonal() << 1, 1, Complex(0, 1), Complex(0, 1);
    const Matrix4 u = w * diag * w.adjoint();
    const SpectralDecomposition s = eig_unitary(Eigen::MatrixXcd(u));
    CHECK(ref::distance(s.reconstruct(), u) < 1e-10);
    CHECK(unitarity_error(s.eigenvectors) < 1e-10);
    CHECK_THAT(s.phases[0], WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.phases[3], WithinAbs(kPi / 2, 1e-12));
  }
  const SpectralDecomposition id = eig_unitary(Eigen::MatrixXcd(Matrix4::Identity()));
  for (double p : id.phases) CHECK(std::abs(p) < 1e-15);
}

TEST_CASE("joint_eigenbasis diagonalises commuting pairs", "[linalg]") {
  Rng rng(8);
  const Matrix4 w = haar_random4(rng);
  Eigen::Vector4d da(1, 1, 2, 2), db(3, 4, 3, 4);
  const Eigen::MatrixXcd a = w * da.cast<Complex>().asDiagonal() * w.adjoint();
  const Eigen::MatrixXcd b = w * db.cast<Complex>().asDiagonal() * w.adjoint();
  const Eigen::MatrixXcd p = joint_eigenbasis(a, b, 1e-8);
  for (const auto* m : {&a, &b}) {
    Eigen::MatrixXcd t = p.adjoint() * *m * p;
    t.diagonal().setZero();
    CHECK(t.cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("random states are normalised", "[linalg]") {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    CHECK_THAT(random_pure_state(4, rng).amplitudes().norm(), WithinAbs(1.0, 1e-14));
    CHECK_THAT(ref::concurrence_partial_trace(random_product_state(rng).as4()),
               WithinAbs(0.0, 1e-7));
  }
}
