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

#include "entcap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entcap/entanglement.hpp"
#include "entcap/error.hpp"

namespace entcap {

namespace {

constexpr double kRangeSlack = 1e-12;

double checked_unit_interval(double v, const char* what) {
  if (!(v >= -kRangeSlack && v <= 1.0 + kRangeSlack)) {
    std::ostringstream os;
    os << what << " " << v << " outside [0, 1]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double c1_two_pure(double overlap) {
  const double s = checked_unit_interval(overlap, "overlap");
  return 1.0 - binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - s * s)));
}

double c_inf_two_pure(double overlap) {
  const double s = checked_unit_interval(overlap, "overlap");
  return binary_entropy(0.5 * (1.0 + s));
}

double ensemble_entropy_two_pure(double p1, double overlap) {
  p1 = checked_unit_interval(p1, "probability");
  const double s = checked_unit_interval(overlap, "overlap");
  const double p2 = 1.0 - p1;
  const double r = std::sqrt((p1 - p2) * (p1 - p2) + 4.0 * p1 * p2 * s * s);
  return binary_entropy(0.5 * (1.0 + std::min(r, 1.0)));
}

SignalPair relation1_signals(const WeylVector& d, const PureState& a,
                             const PureState& b) {
  const Matrix4 ud = canonical_unitary(d);
  const Vector4 in = kron(a.as2(), b.as2());
  const Vector4 in_conj = in.conjugate();
  const Matrix4 yy = kron(pauli::y(), pauli::y());
  PureState psi1 = PureState::normalized(Eigen::VectorXcd(ud * in));
  PureState psi2 =
      PureState::normalized(Eigen::VectorXcd(yy * ud.adjoint() * in_conj));
  const double overlap = std::abs(psi1.amplitudes().dot(psi2.amplitudes()));
  return {std::move(psi1), std::move(psi2), std::min(overlap, 1.0)};
}

SignalPair relation2_signals(const WeylVector& d, const PureState& phi) {
  const Matrix4 ud = canonical_unitary(d);
  const Vector4 v = phi.as4();
  PureState psi1 = PureState::normalized(Eigen::VectorXcd(ud.adjoint() * v));
  PureState psi2 = PureState::normalized(Eigen::VectorXcd(ud * v));
  const double overlap = std::abs(psi1.amplitudes().dot(psi2.amplitudes()));
  return {std::move(psi1), std::move(psi2), std::min(overlap, 1.0)};
}

CapacityRelationReport verify_relation1(const WeylVector& d,
                                        const SearchConfig& cfg) {
  const Matrix4 ud = canonical_unitary(d);
  const CapacityReport cap = capacities_closed_form(d);

  const SearchResult top = max_concurrence_product(ud, cfg);
  const SignalPair at_max =
      relation1_signals(d, top.factors->a, top.factors->b);

  CapacityRelationReport out;
  out.e_max_prod = cap.e_max_prod;
  out.overlap = at_max.overlap;
  out.capacity_term = c1_two_pure(at_max.overlap);
  out.relation_residual = std::abs(out.e_max_prod + out.capacity_term - 1.0);

  // C1 falls with the overlap, so the unconstrained maximum sits at the
  // concurrence minimiser.
  const SearchResult bottom = min_concurrence_product(ud, cfg);
  const SignalPair at_min =
      relation1_signals(d, bottom.factors->a, bottom.factors->b);
  out.literal_capacity_term = c1_two_pure(at_min.overlap);
  out.literal_reading_differs =
      std::abs(*out.literal_capacity_term - out.capacity_term) > 1e-3;
  return out;
}

CapacityRelationReport verify_relation2(const WeylVector& d,
                                        const SearchConfig& cfg) {
  const Matrix4 ud = canonical_unitary(d);
  const CapacityReport cap = capacities_closed_form(d);
  const ProbeSearchResult probe =
      min_probe_overlap(UnitaryMatrix(Matrix4(ud * ud)), cfg);
  const SignalPair pair = relation2_signals(d, probe.direct.argmax_state);

  CapacityRelationReport out;
  out.e_max_prod = cap.e_max_prod;
  out.overlap = pair.overlap;
  out.capacity_term = c_inf_two_pure(pair.overlap);
  out.relation_residual = std::abs(out.e_max_prod - out.capacity_term);
  return out;
}

}  // namespace entcap
