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

#include "reference.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace entcap::ref {

namespace {

Matrix4 pauli_exp(double a, const Matrix2& p) {
  const Matrix4 pp = kron(p, p);
  return std::cos(a) * Matrix4::Identity() - Complex(0, 1) * std::sin(a) * pp;
}

Matrix2 reduced_a(const Vector4& psi) {
  Matrix2 rho = Matrix2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b) rho(a, a2) += psi(2 * a + b) * std::conj(psi(2 * a2 + b));
  return rho;
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double point_to_segment(Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * ab.real() + a.imag() * ab.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * ab);
}

}  // namespace

Matrix4 canonical_unitary_pauli(const WeylVector& d) {
  return pauli_exp(d.alpha_x, pauli::x()) * pauli_exp(d.alpha_y, pauli::y()) *
         pauli_exp(d.alpha_z, pauli::z());
}

double concurrence_partial_trace(const Vector4& psi) {
  const double det = reduced_a(psi).determinant().real();
  return 2.0 * std::sqrt(std::max(det, 0.0));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double entropy_partial_trace(const Vector4& psi) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(reduced_a(psi));
  double e = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double q = es.eigenvalues()(k);
    if (q > 0.0) e -= q * std::log2(q);
  }
  return e;
}

double c_max_prod(const WeylVector& d) {
  const double ax = d.alpha_x, ay = d.alpha_y, az = std::abs(d.alpha_z);
  const double q = kPi / 4;
  if (ax + ay >= q - 1e-12 && ay + az <= q + 1e-12) return 1.0;
  const std::array<double, 4> l{ax + ay - az, ax - ay + az, -ax + ay + az, -ax - ay - az};
  double best = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) best = std::max(best, std::abs(std::sin(l[j] - l[k])));
  return best;
}

double max_delta_concurrence_bruteforce(const Matrix4& u, int starts, int steps, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  auto gain = [&](const Eigen::Matrix<double, 8, 1>& x) {
    Vector4 v;
    for (int k = 0; k < 4; ++k) v(k) = Complex(x(2 * k), x(2 * k + 1));
    v /= v.norm();
    return concurrence_partial_trace(u * v) - concurrence_partial_trace(v);
  };
  double best = -1.0;
  for (int s = 0; s < starts; ++s) {
    Eigen::Matrix<double, 8, 1> x;
    for (int k = 0; k < 8; ++k) x(k) = g(rng);
    x /= x.norm();
    double f = gain(x);
    // Compass search: try +-step on each coordinate, halve when stuck.
    double step = 0.25;
    for (int t = 0; t < steps && step > 1e-10; ++t) {
      bool moved = false;
      for (int k = 0; k < 8; ++k) {
        for (double sign : {1.0, -1.0}) {
          auto y = x;
          y(k) += sign * step;
          const double fy = gain(y);
          if (fy > f) {
            x = y / y.norm();
            f = fy;
            moved = true;
          }
        }
      }
      if (!moved) step /= 2;
    }
    best = std::max(best, f);
  }
  return best;
}

double hull_distance_bruteforce(std::span<const double> phases) {
  std::vector<Complex> p;
  for (double t : phases) p.push_back(std::polar(1.0, t));
  const std::size_t n = p.size();
  double best = 2.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best = std::min(best, point_to_segment(p[i], p[j]));
  if (best < 1e-13) return 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const double s1 = cross(p[j] - p[i], -p[i]);
        const double s2 = cross(p[k] - p[j], -p[j]);
        const double s3 = cross(p[i] - p[k], -p[k]);
        if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) return 0.0;
      }
  return best;
}

double distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return distance(a, b);
  const Complex phase = a(r, c) / b(r, c);
  return distance(a, (phase / std::abs(phase)) * b);
}

bool all_finite(const Eigen::MatrixXcd& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace entcap::ref
