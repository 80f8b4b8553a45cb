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

#include "entcap/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "entcap/error.hpp"

namespace entcap {

namespace {

constexpr double kHalfPi = kPi / 2.0;
constexpr double kQuarterPi = kPi / 4.0;

Matrix2 to_su2(const Matrix2& m) {
  return m / std::sqrt(m.determinant());
}

// Writes a 4x4 local operator as A (x) B. Phase is split arbitrarily.
std::pair<Matrix2, Matrix2> kron_factor(const Matrix4& k) {
  int best_r = 0;
  int best_c = 0;
  double best = -1.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const double n = k.block<2, 2>(2 * r, 2 * c).norm();
      if (n > best) {
        best = n;
        best_r = r;
        best_c = c;
      }
    }
  const Matrix2 b = k.block<2, 2>(2 * best_r, 2 * best_c) * (std::sqrt(2.0) / best);
  Matrix2 a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      a(r, c) = (b.adjoint() * k.block<2, 2>(2 * r, 2 * c)).trace() / 2.0;
  return {a, b};
}

Matrix2 hadamard() {
  Matrix2 h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Matrix2 phase_s() {
  Matrix2 s;
  s << 1, 0, 0, Complex(0, 1);
  return s;
}

Matrix2 rx_half_pi() {
  return (Matrix2::Identity() - Complex(0, 1) * pauli::x()) / std::sqrt(2.0);
}

Matrix2 pauli_for(int axis) {
  switch (axis) {
    case 0: return pauli::x();
    case 1: return pauli::y();
    default: return pauli::z();
  }
}

// Invariant: U_d(raw) = e^{i phase} (la (x) lb) U_d(a) (ra (x) rb).
struct Tracker {
  std::array<double, 3> a;
  WeylReduction rec;

  // a[axis] -> a[axis] - n*pi/2, using U_d(a) = U_d(a') (-i P(x)P)^n.
  void shift(int axis, long n) {
    if (n == 0) return;
    a[axis] -= static_cast<double>(n) * kHalfPi;
    rec.phase -= static_cast<double>(n) * kHalfPi;
    if (n % 2 != 0) {
      const Matrix2 p = pauli_for(axis);
      rec.ra = p * rec.ra;
      rec.rb = p * rec.rb;
    }
  }

  // U_d(a) = G U_d(a_new) G^dagger with G = ga (x) gb.
  void conjugate(const Matrix2& ga, const Matrix2& gb,
                 const std::array<double, 3>& a_new) {
    a = a_new;
    rec.la = rec.la * ga;
    rec.lb = rec.lb * gb;
    rec.ra = ga.adjoint() * rec.ra;
    rec.rb = gb.adjoint() * rec.rb;
    rec.conjugated = true;
  }

  void swap_axes(int i, int j) {
    std::array<double, 3> next = a;
    std::swap(next[i], next[j]);
    Matrix2 g;
    if ((i == 0 && j == 2) || (i == 2 && j == 0)) {
      g = hadamard();
    } else if ((i == 0 && j == 1) || (i == 1 && j == 0)) {
      g = phase_s();
    } else {
      g = rx_half_pi();
    }
    conjugate(g, g, next);
  }

  // Negates the two axes other than `keep`, by conjugating with P_keep (x) 1.
  void flip_pair(int keep) {
    std::array<double, 3> next = a;
    for (int k = 0; k < 3; ++k)
      if (k != keep) next[k] = -next[k];
    conjugate(pauli_for(keep), Matrix2::Identity(), next);
  }
};

}  // namespace

bool in_weyl_chamber(const WeylVector& d, double tol) {
  return std::abs(d.alpha_z) <= d.alpha_y + tol && d.alpha_y <= d.alpha_x + tol &&
         d.alpha_x <= kQuarterPi + tol && d.alpha_y >= -tol;
}

std::array<double, 4> lambdas(const WeylVector& d) {
  const double x = d.alpha_x;
  const double y = d.alpha_y;
  const double z = d.alpha_z;
  return {-x - y - z, -x + y + z, x - y + z, x + y - z};
}

EigenPhases eigenphases(const WeylVector& d) {
  auto l = lambdas(d);
  std::sort(l.begin(), l.end());
  return {l[0], l[1], l[2], l[3]};
}

const Matrix4& magic_basis() {
  static const Matrix4 q = [] {
    const Complex i(0, 1);
    Matrix4 m;
    // clang-format off
    m << 1, 0,  0,  i,
         0, i,  1,  0,
         0, i, -1,  0,
         1, 0,  0, -i;
    // clang-format on
    return Matrix4(m / std::sqrt(2.0));
  }();
  return q;
}

Matrix4 canonical_unitary(const WeylVector& d) {
  const auto l = lambdas(d);
  // Magic-basis columns carry the XX/YY/ZZ eigenvalue patterns of
  // lambda_3, lambda_4, lambda_1, lambda_2 respectively.
  Vector4 diag;
  diag << std::polar(1.0, -l[2]), std::polar(1.0, -l[3]),
      std::polar(1.0, -l[0]), std::polar(1.0, -l[1]);
  const Matrix4& q = magic_basis();
  return q * diag.asDiagonal() * q.adjoint();
}

Matrix4 CanonicalForm::reconstruct() const {
  return std::polar(1.0, global_phase) * kron(xa, xb) * canonical_unitary(d) *
         kron(ya, yb);
}

WeylReduction reduce_to_weyl_tracked(const std::array<double, 3>& raw) {
  Tracker t{raw, {}};

  for (int k = 0; k < 3; ++k) {
    long n = std::lround(t.a[k] / kHalfPi);
    if (t.a[k] - static_cast<double>(n) * kHalfPi <= -kQuarterPi) --n;
    t.shift(k, n);
  }

  auto smaller = [&](int i, int j) { return std::abs(t.a[i]) < std::abs(t.a[j]); };
  if (smaller(0, 1)) t.swap_axes(0, 1);
  if (smaller(1, 2)) t.swap_axes(1, 2);
  if (smaller(0, 1)) t.swap_axes(0, 1);

  if (t.a[0] < 0 && t.a[1] < 0) {
    t.flip_pair(2);
  } else if (t.a[0] < 0) {
    t.flip_pair(1);
  } else if (t.a[1] < 0) {
    t.flip_pair(0);
  }

  // Adding +0.0 turns a -0.0 into +0.0.
  t.rec.d = {t.a[0] + 0.0, t.a[1] + 0.0, t.a[2] + 0.0};
  return t.rec;
}

WeylReductionResult reduce_to_weyl(const std::array<double, 3>& raw) {
  const WeylReduction r = reduce_to_weyl_tracked(raw);
  return {r.d, r.conjugated};
}

CanonicalForm cartan_decompose(const Matrix4& u, const DecomposeConfig& cfg) {
  if (!u.real().allFinite() || !u.imag().allFinite()) {
    throw Error(ErrorCode::kNonFinite, "cartan_decompose: non-finite entries");
  }
  const double unit_err = unitarity_error(u);
  if (unit_err > cfg.unitarity_tol) {
    std::ostringstream os;
    os << "cartan_decompose: input is not unitary (" << unit_err << ")";
    throw Error(ErrorCode::kNotUnitary, os.str());
  }

  // Principal fourth root of det(U) so the remainder lies in SU(4).
  const double root_phase = std::arg(u.determinant()) / 4.0;
  const Matrix4 special = u * std::polar(1.0, -root_phase);

  const Matrix4& q = magic_basis();
  const Matrix4 m = q.adjoint() * special * q;
  const Matrix4 mtm = m.transpose() * m;
  const Eigen::Matrix4d re = 0.5 * (mtm.real() + mtm.real().transpose());
  const Eigen::Matrix4d im = 0.5 * (mtm.imag() + mtm.imag().transpose());

  Eigen::Matrix4d p;
  try {
    p = joint_eigenbasis(re, im, cfg.cluster_tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::kDecomposition,
                std::string("cartan_decompose: ") + e.what());
  }
  if (p.determinant() < 0) p.col(0) = -p.col(0);

  const Eigen::Matrix4cd pc = p.cast<Complex>();
  const Matrix4 diag_sq = pc.transpose() * mtm * pc;
  std::array<double, 4> theta{};
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    theta[k] = std::arg(diag_sq(k, k)) / 2.0;
    sum += theta[k];
  }
  // Branch so that sum(theta) == 0 exactly; leaves diag_sq untouched and
  // makes det(D) = 1.
  theta[0] -= static_cast<double>(std::lround(sum / kPi)) * kPi;

  Vector4 d_inv;
  for (int k = 0; k < 4; ++k) d_inv(k) = std::polar(1.0, -theta[k]);
  const Matrix4 o1 = m * pc * d_inv.asDiagonal();
  const Matrix4 left_local = q * Matrix4(o1.real().cast<Complex>()) * q.adjoint();
  const Matrix4 right_local = q * Matrix4(pc.transpose()) * q.adjoint();

  const auto [a1, b1] = kron_factor(left_local);
  const auto [a2, b2] = kron_factor(right_local);

  // Q^dagger U_d Q = diag(e^{-i l3}, e^{-i l4}, e^{-i l1}, e^{-i l2}).
  const double l3 = -theta[0];
  const double l4 = -theta[1];
  const double l2 = -theta[3];
  const std::array<double, 3> raw = {(l4 + l3) / 2.0, (l4 + l2) / 2.0,
                                     (l3 + l2) / 2.0};
  const WeylReduction red = reduce_to_weyl_tracked(raw);

  CanonicalForm out;
  out.d = red.d;
  out.xa = to_su2(a1 * red.la);
  out.xb = to_su2(b1 * red.lb);
  out.ya = to_su2(red.ra * a2);
  out.yb = to_su2(red.rb * b2);
  const Matrix4 core = kron(out.xa, out.xb) * canonical_unitary(out.d) *
                       kron(out.ya, out.yb);
  out.global_phase = std::arg((core.adjoint() * u).trace());
  out.residual = max_abs(u - std::polar(1.0, out.global_phase) * core);
  if (!(out.residual <= cfg.reconstruction_tol)) {
    std::ostringstream os;
    os << "cartan_decompose: reconstruction residual " << out.residual
       << " exceeds " << cfg.reconstruction_tol;
    throw Error(ErrorCode::kDecomposition, os.str());
  }
  return out;
}

CanonicalForm cartan_decompose(const UnitaryMatrix& u,
                               const DecomposeConfig& cfg) {
  return cartan_decompose(u.as4(), cfg);
}

MirrorResult mirror_negative_alpha_z(const WeylVector& d) {
  if (d.alpha_z >= 0) return {d, false};
  return {{d.alpha_x, d.alpha_y, -d.alpha_z}, true};
}

WeylVector nonnegative_alpha_z(const WeylVector& d) {
  return mirror_negative_alpha_z(d).d;
}

std::array<double, 6> sine_invariants(const WeylVector& d) {
  const auto l = lambdas(d);
  std::array<double, 6> out{};
  int n = 0;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) out[n++] = std::abs(std::sin(l[j] - l[k]));
  std::sort(out.begin(), out.end());
  return out;
}

WeylVector random_weyl_vector(Rng& rng) {
  std::uniform_real_distribution<double> quarter(0.0, kQuarterPi);
  std::uniform_real_distribution<double> signed_quarter(-kQuarterPi, kQuarterPi);
  for (;;) {
    const double x = quarter(rng);
    const double y = quarter(rng);
    const double z = signed_quarter(rng);
    if (y <= x && std::abs(z) <= y) return {x, y, z};
  }
}

}  // namespace entcap
