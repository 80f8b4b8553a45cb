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

#include <span>
#include <string>
#include <vector>

#include "entcap/canonical.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// Convex hull of unit-circle points e^{i theta_j} and its distance from 0.
struct SpectrumHull {
  std::vector<double> phases;
  /// Distinct hull vertices in counter-clockwise order. When the origin is
  /// outside, the first and last vertex are the extreme points of the arc.
  std::vector<Complex> hull_vertices;
  double d_min = 1.0;
  bool origin_inside = false;
};

/// Exact planar geometry: 0 lies in the hull iff no circular gap between
/// consecutive phases exceeds pi (tested with 1e-12 slack). Otherwise the
/// points occupy an arc of width 2*gamma < pi and the nearest hull point is
/// the midpoint of the chord between its ends, at distance cos(gamma).
/// Throws kInvalidArgument on empty input.
SpectrumHull hull_min_distance(std::span<const double> phases);

/// D_min(U_d^2) from the closed forms: 0 for perfect entanglers,
/// cos(2(ax + ay)) when ax + ay < pi/4, -cos(2(ay + az)) when ay + az > pi/4.
/// alpha_z is mirrored to be non-negative first.
double d_min_canonical(const WeylVector& d);

/// min over unit |phi> of |<phi| S^dagger T |phi>|, via the hull of
/// spec(S^dagger T).
double min_overlap(const UnitaryMatrix& s, const UnitaryMatrix& t);

enum class Route { kClosed, kGeometric, kNumeric };
const char* to_string(Route r);

struct TheoremResidual {
  Route route = Route::kClosed;
  double c_prod_sq = 0.0;
  double d_min_sq = 0.0;
  /// |c_prod_sq + d_min_sq - 1|
  double residual = 0.0;
};

TheoremResidual theorem_residual(Route route, double c_max_prod, double d_min);

struct TheoremCheck {
  WeylVector d;
  double c_max_prod = 0.0;
  double c_max = 0.0;
  double d_min_closed = 0.0;
  /// From the eigenphases of the matrix U_d^2 via hull_min_distance.
  double d_min_geometric = 0.0;
  TheoremResidual closed;
  TheoremResidual geometric;
  /// |C_max^4 + D_min^2 - 1| for each route.
  double quartic_closed = 0.0;
  double quartic_geometric = 0.0;
};

/// Evaluates C_prod^2 + D_min(U_d^2)^2 = 1 (and the C_max^4 form) by the
/// closed-form and geometric routes.
TheoremCheck verify_theorem(const WeylVector& d);

struct HermiticityCheck {
  /// U_d^2 is a phase times the identity (equivalently D_min = 1).
  bool up_to_phase = false;
  /// ||U_d - U_d^dagger||_max <= tol.
  bool strict = false;
};

HermiticityCheck hermiticity(const WeylVector& d, double tol = 1e-10);

/// Phase-insensitive Hermiticity of U_d; see HermiticityCheck::up_to_phase.
bool is_hermitian_canonical(const WeylVector& d);

}  // namespace entcap
