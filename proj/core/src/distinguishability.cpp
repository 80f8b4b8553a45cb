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

#include "entcap/distinguishability.hpp"

#include <algorithm>
#include <cmath>

#include "entcap/entanglement.hpp"
#include "entcap/error.hpp"

namespace entcap {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kDedupTol = 1e-10;
constexpr double kGapSlack = 1e-12;

}  // namespace

SpectrumHull hull_min_distance(std::span<const double> phases) {
  if (phases.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "hull_min_distance: need at least one phase");
  }
  SpectrumHull out;
  out.phases.assign(phases.begin(), phases.end());

  std::vector<double> t;
  t.reserve(phases.size());
  for (double p : phases) {
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::kNonFinite, "hull_min_distance: non-finite phase");
    }
    double w = wrap_phase(p);
    if (w < 0) w += kTwoPi;
    t.push_back(w);
  }
  std::sort(t.begin(), t.end());
  std::vector<double> pts;
  for (double v : t)
    if (pts.empty() || v - pts.back() > kDedupTol) pts.push_back(v);
  if (pts.size() > 1 && pts.front() + kTwoPi - pts.back() <= kDedupTol) {
    pts.pop_back();
  }

  const std::size_t m = pts.size();
  std::size_t widest = m - 1;
  double widest_gap = pts.front() + kTwoPi - pts.back();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double g = pts[k + 1] - pts[k];
    if (g > widest_gap) {
      widest_gap = g;
      widest = k;
    }
  }

  // Vertices counter-clockwise, starting just after the widest gap.
  for (std::size_t k = 1; k <= m; ++k) {
    out.hull_vertices.push_back(std::polar(1.0, pts[(widest + k) % m]));
  }

  if (widest_gap <= kPi + kGapSlack) {
    out.origin_inside = true;
    out.d_min = 0.0;
  } else {
    const double half_arc = 0.5 * (kTwoPi - widest_gap);
    out.d_min = std::clamp(std::cos(half_arc), 0.0, 1.0);
  }
  return out;
}

double d_min_canonical(const WeylVector& raw) {
  const WeylVector d = nonnegative_alpha_z(raw);
  if (is_perfect_entangler(d)) return 0.0;
  const double xy = d.alpha_x + d.alpha_y;
  if (xy < kPi / 4.0 - kBoundarySlack) {
    return std::clamp(std::cos(2.0 * xy), 0.0, 1.0);
  }
  return std::clamp(-std::cos(2.0 * (d.alpha_y + d.alpha_z)), 0.0, 1.0);
}

double min_overlap(const UnitaryMatrix& s, const UnitaryMatrix& t) {
  if (s.dim() != t.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "min_overlap: operators have different dimensions");
  }
  const Eigen::MatrixXcd v = s.matrix().adjoint() * t.matrix();
  const auto spectrum = eig_unitary(v);
  return hull_min_distance(spectrum.phases).d_min;
}

const char* to_string(Route r) {
  switch (r) {
    case Route::kClosed: return "closed";
    case Route::kGeometric: return "geometric";
    case Route::kNumeric: return "numeric";
  }
  return "unknown";
}

TheoremResidual theorem_residual(Route route, double c_max_prod, double d_min) {
  TheoremResidual r;
  r.route = route;
  r.c_prod_sq = c_max_prod * c_max_prod;
  r.d_min_sq = d_min * d_min;
  r.residual = std::abs(r.c_prod_sq + r.d_min_sq - 1.0);
  return r;
}

TheoremCheck verify_theorem(const WeylVector& d) {
  TheoremCheck out;
  out.d = d;
  const CapacityReport cap = capacities_closed_form(d);
  out.c_max_prod = cap.c_max_prod;
  out.c_max = cap.c_max;
  out.d_min_closed = d_min_canonical(d);

  const Matrix4 ud = canonical_unitary(d);
  const auto spectrum = eig_unitary(Eigen::MatrixXcd(ud * ud));
  out.d_min_geometric = hull_min_distance(spectrum.phases).d_min;

  out.closed = theorem_residual(Route::kClosed, out.c_max_prod, out.d_min_closed);
  out.geometric =
      theorem_residual(Route::kGeometric, out.c_max_prod, out.d_min_geometric);
  const double c4 = std::pow(out.c_max, 4);
  out.quartic_closed = std::abs(c4 + out.d_min_closed * out.d_min_closed - 1.0);
  out.quartic_geometric =
      std::abs(c4 + out.d_min_geometric * out.d_min_geometric - 1.0);
  return out;
}

HermiticityCheck hermiticity(const WeylVector& d, double tol) {
  const Matrix4 ud = canonical_unitary(d);
  const Matrix4 sq = ud * ud;
  const Complex scale = sq.trace() / 4.0;
  HermiticityCheck out;
  out.strict = max_abs(ud - ud.adjoint()) <= tol;
  out.up_to_phase = max_abs(sq - scale * Matrix4::Identity()) <= tol;
  return out;
}

bool is_hermitian_canonical(const WeylVector& d) {
  return hermiticity(d).up_to_phase;
}

}  // namespace entcap
