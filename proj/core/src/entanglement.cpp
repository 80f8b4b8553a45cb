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

#include "entcap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entcap/error.hpp"

namespace entcap {

namespace {

constexpr double kClampTol = 1e-12;

void require_normalized(double norm) {
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "state is not normalised: norm = " << norm;
    throw Error(ErrorCode::kNotNormalized, os.str());
  }
}

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double binary_entropy(double x) {
  if (!(x >= -kClampTol && x <= 1.0 + kClampTol)) {
    std::ostringstream os;
    os << "binary_entropy: argument " << x << " outside [0, 1]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  return -plogp(x) - plogp(1.0 - x);
}

double concurrence(const Vector4& psi) {
  require_normalized(psi.norm());
  // det(rho_A) = |det [[psi00, psi01], [psi10, psi11]]|^2.
  const double det_rho = std::norm(psi(0) * psi(3) - psi(1) * psi(2));
  return std::min(1.0, 2.0 * std::sqrt(std::max(det_rho, 0.0)));
}

double concurrence(const PureState& psi) { return concurrence(psi.as4()); }

double concurrence_conjugate_form(const PureState& psi) {
  const Vector4 v = psi.as4();
  require_normalized(v.norm());
  const Matrix4 yy = kron(pauli::y(), pauli::y());
  const Vector4 conj = v.conjugate();
  return std::min(1.0, std::abs(v.dot(yy * conj)));
}

double entropy_of_entanglement(const PureState& psi) {
  const Vector4 v = psi.as4();
  require_normalized(v.norm());
  Matrix2 amp;
  amp << v(0), v(1), v(2), v(3);
  const Matrix2 rho = amp * amp.adjoint();
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double off = std::abs(rho(0, 1));
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * off * off);
  const double q1 = std::clamp(0.5 * (a + d + disc), 0.0, 1.0);
  const double q2 = std::clamp(0.5 * (a + d - disc), 0.0, 1.0);
  return -plogp(q1) - plogp(q2);
}

double entropy_from_concurrence(double c) {
  if (!(c >= -kClampTol && c <= 1.0 + kClampTol)) {
    std::ostringstream os;
    os << "concurrence " << c << " outside [0, 1]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

EntanglementValue entanglement(const PureState& psi) {
  return {concurrence(psi), entropy_of_entanglement(psi)};
}

bool is_perfect_entangler(const WeylVector& d) {
  if (d.alpha_z < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "is_perfect_entangler: alpha_z < 0, mirror the vector first");
  }
  return d.alpha_x + d.alpha_y >= kPi / 4.0 - kBoundarySlack &&
         d.alpha_y + d.alpha_z <= kPi / 4.0 + kBoundarySlack;
}

CapacityReport capacities_closed_form(const WeylVector& raw) {
  const WeylVector d = nonnegative_alpha_z(raw);
  CapacityReport out;
  if (is_perfect_entangler(d)) {
    out.c_max_prod = out.c_max = out.e_max_prod = 1.0;
    out.perfect_entangler = true;
    return out;
  }
  const auto l = lambdas(d);
  double best = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      best = std::max(best, std::abs(std::sin(l[j] - l[k])));
  out.c_max_prod = std::min(best, 1.0);
  out.c_max = std::sqrt(out.c_max_prod);
  out.e_max_prod = entropy_from_concurrence(out.c_max_prod);
  return out;
}

}  // namespace entcap
