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

#include "entcap/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entcap/error.hpp"

namespace entcap {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNotUnitary: return "not_unitary";
    case ErrorCode::kNotNormalized: return "not_normalized";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kNonFinite: return "non_finite";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kDecomposition: return "decomposition";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

namespace pauli {
Matrix2 identity() { return Matrix2::Identity(); }
Matrix2 x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2 y() {
  const Complex i(0, 1);
  Matrix2 m;
  m << 0, -i, i, 0;
  return m;
}
Matrix2 z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_error(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.size() == 0) return HUGE_VAL;
  const auto n = m.rows();
  return max_abs(m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n));
}

double wrap_phase(double angle) {
  double w = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

namespace {

bool all_finite(const Eigen::MatrixXcd& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

std::string dim_message(const char* what, Eigen::Index r, Eigen::Index c) {
  std::ostringstream os;
  os << what << ": got " << r << "x" << c;
  return os.str();
}

}  // namespace

UnitaryMatrix UnitaryMatrix::checked(Eigen::MatrixXcd m, double tol) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw Error(ErrorCode::kDimensionMismatch,
                dim_message("unitary must be 2x2 or 4x4", m.rows(), m.cols()));
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");
  }
  const double err = unitarity_error(m);
  if (err > tol) {
    std::ostringstream os;
    os << "matrix is not unitary: ||U^dagger U - I||_max = " << err;
    throw Error(ErrorCode::kNotUnitary, os.str());
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix::UnitaryMatrix(const Matrix2& m)
    : UnitaryMatrix(checked(Eigen::MatrixXcd(m))) {}
UnitaryMatrix::UnitaryMatrix(const Matrix4& m)
    : UnitaryMatrix(checked(Eigen::MatrixXcd(m))) {}

Matrix2 UnitaryMatrix::as2() const {
  if (dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a 2x2 unitary");
  }
  return m_;
}

Matrix4 UnitaryMatrix::as4() const {
  if (dim() != 4) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a 4x4 unitary");
  }
  return m_;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(Eigen::MatrixXcd(m_.adjoint()));
}

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "multiply: operands have different dimensions");
  }
  return UnitaryMatrix::checked(a.matrix() * b.matrix());
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int ra = 0; ra < 2; ++ra)
    for (int ca = 0; ca < 2; ++ca)
      out.block<2, 2>(2 * ra, 2 * ca) = a(ra, ca) * b;
  return out;
}

Vector4 kron(const Vector2& a, const Vector2& b) {
  Vector4 out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "kron: both factors must be 2x2");
  }
  return UnitaryMatrix::checked(Eigen::MatrixXcd(kron(a.as2(), b.as2())));
}

PureState PureState::checked(Eigen::VectorXcd amplitudes, double tol) {
  if (amplitudes.size() != 2 && amplitudes.size() != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pure state must have dimension 2 or 4");
  }
  if (!all_finite(amplitudes)) {
    throw Error(ErrorCode::kNonFinite, "state has non-finite amplitudes");
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream os;
    os << "state is not normalised: norm = " << norm;
    throw Error(ErrorCode::kNotNormalized, os.str());
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kNotNormalized, "cannot normalise a zero vector");
  }
  amplitudes /= norm;
  return checked(std::move(amplitudes));
}

PureState::PureState(const Vector2& v)
    : PureState(checked(Eigen::VectorXcd(v))) {}
PureState::PureState(const Vector4& v)
    : PureState(checked(Eigen::VectorXcd(v))) {}

Vector2 PureState::as2() const {
  if (dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a qubit state");
  }
  return v_;
}

Vector4 PureState::as4() const {
  if (dim() != 4) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a two-qubit state");
  }
  return v_;
}

PureState kron(const PureState& a, const PureState& b) {
  return PureState::normalized(Eigen::VectorXcd(kron(a.as2(), b.as2())));
}

Eigen::MatrixXcd SpectralDecomposition::reconstruct() const {
  Eigen::VectorXcd diag(phases.size());
  for (std::size_t j = 0; j < phases.size(); ++j) {
    diag(static_cast<Eigen::Index>(j)) = std::polar(1.0, phases[j]);
  }
  return eigenvectors * diag.asDiagonal() * eigenvectors.adjoint();
}

namespace {

template <class Mat>
double off_diagonal(const Mat& m) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

// Diagonalise `a`; inside each cluster of (near-)equal eigenvalues the
// projection of b + g*a picks the basis. Mixing in a little of `a` keeps the
// choice well-posed when b is flat across the cluster.
template <class Mat>
Mat clustered_basis(const Mat& a, const Mat& b, double cluster_tol) {
  constexpr double kMix = 0.6180339887498949;
  Eigen::SelfAdjointEigenSolver<Mat> outer(a);
  if (outer.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergence, "self-adjoint eigensolver failed");
  }
  const auto& values = outer.eigenvalues();
  Mat basis = outer.eigenvectors();
  const Eigen::Index n = a.rows();
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && values(end) - values(end - 1) <= cluster_tol) ++end;
    if (end - begin > 1) {
      // Cluster blocks are narrower than a fixed-size Mat, so go dynamic.
      using Block = Eigen::Matrix<typename Mat::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
      const Block block = basis.middleCols(begin, end - begin);
      const Block projected = block.adjoint() * (b + kMix * a) * block;
      Eigen::SelfAdjointEigenSolver<Block> inner(
          Block(0.5 * (projected + projected.adjoint())));
      basis.middleCols(begin, end - begin) = block * inner.eigenvectors();
    }
    begin = end;
  }
  return basis;
}

template <class Mat>
Mat joint_basis_impl(const Mat& a, const Mat& b, double cluster_tol,
                     double check_tol) {
  auto residual = [&](const Mat& v) {
    return std::max(off_diagonal(Mat(v.adjoint() * a * v)),
                    off_diagonal(Mat(v.adjoint() * b * v)));
  };
  Mat best = clustered_basis(a, b, cluster_tol);
  double best_residual = residual(best);
  if (best_residual <= check_tol) return best;

  // Generic mixtures separate every pair of distinct joint eigenvalues
  // except on a measure-zero set of angles; try a few fixed ones.
  static constexpr std::array<double, 6> kAngles = {0.5235987755982988, 1.1,
                                                    2.0, 0.3819660112501051,
                                                    2.7, 1.7};
  for (double t : kAngles) {
    Mat v = clustered_basis(Mat(std::cos(t) * a + std::sin(t) * b),
                            Mat(-std::sin(t) * a + std::cos(t) * b),
                            cluster_tol);
    const double r = residual(v);
    if (r < best_residual) {
      best = v;
      best_residual = r;
    }
    if (best_residual <= check_tol) return best;
  }
  std::ostringstream os;
  os << "joint diagonalisation did not converge (off-diagonal "
     << best_residual << ")";
  throw Error(ErrorCode::kConvergence, os.str());
}

}  // namespace

Eigen::MatrixXcd joint_eigenbasis(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b, double cluster_tol,
                                  double check_tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "joint_eigenbasis: operands must be square and equal-sized");
  }
  return joint_basis_impl(a, b, cluster_tol, check_tol);
}

Eigen::Matrix4d joint_eigenbasis(const Eigen::Matrix4d& a,
                                 const Eigen::Matrix4d& b, double cluster_tol,
                                 double check_tol) {
  return joint_basis_impl(a, b, cluster_tol, check_tol);
}

SpectralDecomposition eig_unitary(const Eigen::MatrixXcd& u,
                                  const EigConfig& cfg) {
  if (u.rows() != u.cols() || u.size() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                dim_message("eig_unitary needs a square matrix", u.rows(),
                            u.cols()));
  }
  if (!all_finite(u)) {
    throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");
  }
  if (unitarity_error(u) > cfg.unitarity_tol) {
    throw Error(ErrorCode::kNotUnitary, "eig_unitary: input is not unitary");
  }
  const Complex i(0, 1);
  const Eigen::MatrixXcd herm_re = 0.5 * (u + u.adjoint());
  const Eigen::MatrixXcd herm_im = (u - u.adjoint()) / (2.0 * i);
  const Eigen::MatrixXcd basis =
      joint_eigenbasis(herm_re, herm_im, cfg.cluster_tol);

  const Eigen::Index n = u.rows();
  std::vector<double> raw(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex rayleigh = basis.col(j).dot(u * basis.col(j));
    raw[static_cast<std::size_t>(j)] = wrap_phase(std::arg(rayleigh));
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) {
    return raw[static_cast<std::size_t>(l)] < raw[static_cast<std::size_t>(r)];
  });

  SpectralDecomposition out;
  out.eigenvectors.resize(n, n);
  out.phases.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto src = order[static_cast<std::size_t>(j)];
    out.phases.push_back(raw[static_cast<std::size_t>(src)]);
    out.eigenvectors.col(j) = basis.col(src);
  }

  // Re-orthonormalise inside each degenerate phase group.
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && out.phases[static_cast<std::size_t>(end)] -
                              out.phases[static_cast<std::size_t>(end - 1)] <
                          cfg.cluster_tol) {
      ++end;
    }
    for (Eigen::Index c = begin; c < end; ++c) {
      for (Eigen::Index p = begin; p < c; ++p) {
        out.eigenvectors.col(c) -=
            out.eigenvectors.col(p).dot(out.eigenvectors.col(c)) *
            out.eigenvectors.col(p);
      }
      out.eigenvectors.col(c).normalize();
    }
    begin = end;
  }

  const double residual = max_abs(out.reconstruct() - u);
  if (residual > cfg.reconstruction_tol) {
    std::ostringstream os;
    os << "eig_unitary: reconstruction residual " << residual;
    throw Error(ErrorCode::kConvergence, os.str());
  }
  return out;
}

SpectralDecomposition eig_unitary(const UnitaryMatrix& u,
                                  const EigConfig& cfg) {
  return eig_unitary(u.matrix(), cfg);
}

namespace {

Eigen::MatrixXcd ginibre(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

Eigen::MatrixXcd haar_matrix(int dim, Rng& rng) {
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(dim, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

UnitaryMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim != 2 && dim != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "haar_random_unitary: dim must be 2 or 4");
  }
  return UnitaryMatrix::checked(haar_matrix(dim, rng));
}

Matrix2 haar_random2(Rng& rng) { return haar_matrix(2, rng); }
Matrix4 haar_random4(Rng& rng) { return haar_matrix(4, rng); }

PureState random_pure_state(int dim, Rng& rng) {
  if (dim != 2 && dim != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "random_pure_state: dim must be 2 or 4");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return PureState::normalized(std::move(v));
}

PureState random_product_state(Rng& rng) {
  const PureState a = random_pure_state(2, rng);
  const PureState b = random_pure_state(2, rng);
  return kron(a, b);
}

}  // namespace entcap
