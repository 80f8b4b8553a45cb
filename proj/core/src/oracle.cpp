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

#include "entcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entcap/entanglement.hpp"
#include "entcap/error.hpp"
#include "entcap/optimize.hpp"

namespace entcap {

void SearchConfig::validate() const {
  if (coarse_grid_per_angle <= 0 || restarts <= 0 || refine_iterations <= 0 ||
      !(tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "SearchConfig: grid, restarts, iterations and tolerance must "
                "be positive");
  }
}

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kHalfPi = kPi / 2.0;

int round_up(int n, int multiple) {
  return ((std::max(n, 1) + multiple - 1) / multiple) * multiple;
}

std::vector<double> closed_axis(double hi, int intervals) {
  std::vector<double> v(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k) v[k] = hi * k / intervals;
  return v;
}

std::vector<double> periodic_axis(int points) {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) v[k] = kTwoPi * k / points;
  return v;
}

struct Axis {
  std::vector<double> grid;
  double lo;
  double hi;
};

struct Outcome {
  std::vector<double> x;
  double value;
  long evaluations;
};

// Maximises `score` over the box spanned by `axes`: exhaustive grid, then
// Nelder-Mead from the best grid points, from seeded random points and from
// any caller-supplied starts.
Outcome maximize(const Objective& score, const std::vector<Axis>& axes,
                 const SearchConfig& cfg,
                 const std::vector<std::vector<double>>& extra_starts = {}) {
  cfg.validate();
  const std::size_t dims = axes.size();
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.grid.size();

  auto decode = [&](std::size_t index) {
    std::vector<double> x(dims);
    for (std::size_t d = dims; d-- > 0;) {
      const std::size_t n = axes[d].grid.size();
      x[d] = axes[d].grid[index % n];
      index /= n;
    }
    return x;
  };

  std::vector<double> values(total);
  constexpr std::size_t kChunks = 64;
  parallel_for(kChunks, [&](std::size_t c) {
    const std::size_t begin = total * c / kChunks;
    const std::size_t end = total * (c + 1) / kChunks;
    for (std::size_t i = begin; i < end; ++i) {
      const auto x = decode(i);
      values[i] = score(std::span<const double>(x));
    }
  });
  long evaluations = static_cast<long>(total);

  const std::size_t n_random = static_cast<std::size_t>(cfg.restarts) / 4;
  const std::size_t n_grid =
      std::min(total, static_cast<std::size_t>(cfg.restarts) - n_random);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(n_grid),
                    order.end(), [&](std::size_t l, std::size_t r) {
                      return values[l] > values[r] ||
                             (values[l] == values[r] && l < r);
                    });

  std::vector<std::vector<double>> starts;
  for (std::size_t k = 0; k < n_grid; ++k) starts.push_back(decode(order[k]));
  for (std::size_t k = 0; k < n_random; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    Rng rng(seq);
    std::vector<double> x(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      std::uniform_real_distribution<double> u(axes[d].lo, axes[d].hi);
      x[d] = u(rng);
    }
    starts.push_back(std::move(x));
  }
  starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());

  NelderMeadOptions opts;
  opts.max_iterations = cfg.refine_iterations;
  opts.x_tol = cfg.tolerance * 1e-2;
  opts.f_tol = cfg.tolerance * cfg.tolerance * 1e-2;
  opts.initial_step = kPi / (2.0 * cfg.coarse_grid_per_angle);
  const Objective negated = [&](std::span<const double> x) { return -score(x); };

  std::vector<NelderMeadResult> refined(starts.size());
  parallel_for(starts.size(), [&](std::size_t k) {
    refined[k] = nelder_mead(negated, starts[k], opts);
  });

  Outcome best{starts.front(), values[order.front()], evaluations};
  for (const auto& r : refined) {
    best.evaluations += r.evaluations;
    if (-r.value > best.value) {
      best.value = -r.value;
      best.x = r.x;
    }
  }
  return best;
}

Vector2 qubit(double polar, double azimuth) {
  return {Complex(std::cos(polar / 2.0), 0.0),
          std::polar(std::sin(polar / 2.0), azimuth)};
}

// Hyperspherical magnitudes (a, b, c) and relative phases (p1, p2, p3).
Vector4 two_qubit(std::span<const double> x) {
  const double sa = std::sin(x[0]);
  const double sb = std::sin(x[1]);
  Vector4 v;
  v << std::cos(x[0]), std::polar(sa * std::cos(x[1]), x[3]),
      std::polar(sa * sb * std::cos(x[2]), x[4]),
      std::polar(sa * sb * std::sin(x[2]), x[5]);
  return v / v.norm();
}

// Inverse of two_qubit up to global phase.
std::vector<double> two_qubit_angles(const Vector4& v) {
  const double r23 = std::hypot(std::abs(v(2)), std::abs(v(3)));
  const double r123 = std::hypot(std::abs(v(1)), r23);
  const double ref = std::arg(v(0));
  return {std::atan2(r123, std::abs(v(0))),
          std::atan2(r23, std::abs(v(1))),
          std::atan2(std::abs(v(3)), std::abs(v(2))),
          std::arg(v(1)) - ref,
          std::arg(v(2)) - ref,
          std::arg(v(3)) - ref};
}

Eigen::VectorXcd probe_state(std::span<const double> x, int dim) {
  if (dim == 4) return two_qubit(x);
  Eigen::VectorXcd v(2);
  v << std::cos(x[0]), std::polar(std::sin(x[0]), x[1]);
  return v;
}

std::vector<Axis> product_axes(const SearchConfig& cfg) {
  const int n = round_up(cfg.coarse_grid_per_angle, 8);
  const Axis polar{closed_axis(kPi, n), 0.0, kPi};
  const Axis azimuth{periodic_axis(n), 0.0, kTwoPi};
  return {polar, azimuth, polar, azimuth};
}

std::vector<Axis> state_axes(const SearchConfig& cfg, int dim) {
  const int n = round_up(cfg.coarse_grid_per_angle, 8);
  const int amp_intervals = std::max(2, round_up(n / 6, 2));
  const int phase_points = std::max(8, round_up(n / 3, 8));
  const Axis amp{closed_axis(kHalfPi, amp_intervals), 0.0, kHalfPi};
  const Axis phase{periodic_axis(phase_points), 0.0, kTwoPi};
  if (dim == 2) return {amp, phase};
  return {amp, amp, amp, phase, phase, phase};
}

SearchResult product_search(const Matrix4& u, const SearchConfig& cfg,
                            double sign) {
  if (unitarity_error(u) > kUnitarityTol) {
    throw Error(ErrorCode::kNotUnitary, "oracle: input is not unitary");
  }
  const Objective score = [&](std::span<const double> x) {
    const Vector4 in = kron(qubit(x[0], x[1]), qubit(x[2], x[3]));
    const Vector4 out = u * in;
    return sign * concurrence(Vector4(out / out.norm()));
  };
  const Outcome best = maximize(score, product_axes(cfg), cfg);
  const Vector2 a = qubit(best.x[0], best.x[1]);
  const Vector2 b = qubit(best.x[2], best.x[3]);
  return SearchResult{sign * best.value, PureState(Vector4(kron(a, b))),
                      best.evaluations, ProductFactors{PureState(a), PureState(b)}};
}

}  // namespace

SearchResult max_concurrence_product(const Matrix4& u, const SearchConfig& cfg) {
  return product_search(u, cfg, 1.0);
}

SearchResult min_concurrence_product(const Matrix4& u, const SearchConfig& cfg) {
  return product_search(u, cfg, -1.0);
}

SearchResult max_delta_concurrence(const Matrix4& u, const SearchConfig& cfg) {
  if (unitarity_error(u) > kUnitarityTol) {
    throw Error(ErrorCode::kNotUnitary, "oracle: input is not unitary");
  }
  const Objective score = [&](std::span<const double> x) {
    const Vector4 in = two_qubit(x);
    const Vector4 out = u * in;
    return concurrence(Vector4(out / out.norm())) - concurrence(in);
  };
  // Product inputs are part of the manifold, so the product optimum is a
  // start as well; the result can then never fall below it.
  const SearchResult product = max_concurrence_product(u, cfg);
  const Outcome best = maximize(score, state_axes(cfg, 4), cfg,
                                {two_qubit_angles(product.argmax_state.as4())});
  return SearchResult{best.value, PureState(two_qubit(best.x)),
                      best.evaluations + product.evaluations, std::nullopt};
}

double simplex_min_modulus(std::span<const double> phases,
                           std::vector<double>* weights) {
  if (phases.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "simplex_min_modulus: need at least one phase");
  }
  const std::size_t n = phases.size();
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = std::polar(1.0, phases[j]);
  auto cross = [](Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
  };

  double best = 1.0;
  std::vector<double> best_w(n, 0.0);
  best_w[0] = 1.0;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex edge = z[j] - z[i];
      const double len2 = std::norm(edge);
      if (len2 == 0.0) continue;
      const double t =
          std::clamp(-(std::conj(edge) * z[i]).real() / len2, 0.0, 1.0);
      const double dist = std::abs(z[i] + t * edge);
      if (dist < best) {
        best = dist;
        std::fill(best_w.begin(), best_w.end(), 0.0);
        best_w[i] = 1.0 - t;
        best_w[j] = t;
      }
    }

  constexpr double kInsideSlack = 1e-14;
  for (std::size_t i = 0; i < n && best > 0.0; ++i)
    for (std::size_t j = i + 1; j < n && best > 0.0; ++j)
      for (std::size_t k = j + 1; k < n && best > 0.0; ++k) {
        const Complex e1 = z[j] - z[i];
        const Complex e2 = z[k] - z[i];
        const double area = cross(e1, e2);
        if (std::abs(area) < 1e-14) continue;
        const Complex p = -z[i];
        const double u = cross(p, e2) / area;
        const double v = cross(e1, p) / area;
        if (u >= -kInsideSlack && v >= -kInsideSlack &&
            u + v <= 1.0 + kInsideSlack) {
          const double wu = std::max(u, 0.0);
          const double wv = std::max(v, 0.0);
          const double wi = std::max(1.0 - u - v, 0.0);
          const double s = wu + wv + wi;
          std::fill(best_w.begin(), best_w.end(), 0.0);
          best_w[i] = wi / s;
          best_w[j] = wu / s;
          best_w[k] = wv / s;
          Complex at(0.0, 0.0);
          for (std::size_t m = 0; m < n; ++m) at += best_w[m] * z[m];
          best = std::abs(at);
        }
      }

  if (weights != nullptr) *weights = best_w;
  return best;
}

ProbeSearchResult min_probe_overlap(const UnitaryMatrix& v,
                                    const SearchConfig& cfg) {
  const int dim = v.dim();
  const Eigen::MatrixXcd& vm = v.matrix();

  const Objective score = [&](std::span<const double> x) {
    const Eigen::VectorXcd phi = probe_state(x, dim);
    return -std::norm(phi.dot(vm * phi));
  };
  const Outcome direct = maximize(score, state_axes(cfg, dim), cfg);
  PureState direct_state = PureState::normalized(probe_state(direct.x, dim));
  const double direct_value = std::sqrt(std::max(-direct.value, 0.0));

  const SpectralDecomposition spectrum = eig_unitary(v);
  std::vector<double> weights;
  simplex_min_modulus(spectrum.phases, &weights);
  Eigen::VectorXcd probe = Eigen::VectorXcd::Zero(dim);
  for (int j = 0; j < dim; ++j) {
    probe += std::sqrt(weights[static_cast<std::size_t>(j)]) *
             spectrum.eigenvectors.col(j);
  }
  PureState exact_state = PureState::normalized(probe);
  const Eigen::VectorXcd& phi = exact_state.amplitudes();
  const double exact_value = std::abs(phi.dot(vm * phi));

  return ProbeSearchResult{
      SearchResult{exact_value, std::move(exact_state), 1, std::nullopt},
      SearchResult{direct_value, std::move(direct_state), direct.evaluations,
                   std::nullopt},
      std::move(weights)};
}

}  // namespace entcap
