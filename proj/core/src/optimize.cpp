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

#include "entcap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace entcap {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

double spread(const std::vector<Vertex>& s) {
  double worst = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k)
    for (std::size_t j = 0; j < s[k].x.size(); ++j)
      worst = std::max(worst, std::abs(s[k].x[j] - s[0].x[j]));
  return worst;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(std::span<const double>(x));
  };

  Vertex best{x0, eval(x0)};
  if (n == 0) {
    result.x = best.x;
    result.value = best.f;
    return result;
  }

  for (int round = 0; round <= opts.restarts; ++round) {
    const double step = opts.initial_step / std::pow(4.0, round);
    std::vector<Vertex> s;
    s.reserve(n + 1);
    s.push_back(best);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> x = best.x;
      x[k] += step;
      s.push_back({x, eval(x)});
    }

    for (int it = 0; it < opts.max_iterations; ++it) {
      std::stable_sort(s.begin(), s.end(),
                       [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (s.back().f - s.front().f <= opts.f_tol && spread(s) <= opts.x_tol) {
        break;
      }
      std::vector<double> centroid(n, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += s[k].x[j] / n;

      auto along = [&](double t) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j)
          x[j] = centroid[j] + t * (s.back().x[j] - centroid[j]);
        return x;
      };

      Vertex reflected{along(-1.0), 0.0};
      reflected.f = eval(reflected.x);
      if (reflected.f < s.front().f) {
        Vertex expanded{along(-2.0), 0.0};
        expanded.f = eval(expanded.x);
        s.back() = expanded.f < reflected.f ? expanded : reflected;
        continue;
      }
      if (reflected.f < s[n - 1].f) {
        s.back() = reflected;
        continue;
      }
      const bool outside = reflected.f < s.back().f;
      Vertex contracted{along(outside ? -0.5 : 0.5), 0.0};
      contracted.f = eval(contracted.x);
      if (contracted.f < std::min(reflected.f, s.back().f)) {
        s.back() = contracted;
        continue;
      }
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 0; j < n; ++j)
          s[k].x[j] = s[0].x[j] + 0.5 * (s[k].x[j] - s[0].x[j]);
        s[k].f = eval(s[k].x);
      }
    }
    const auto it = std::min_element(
        s.begin(), s.end(),
        [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const bool improved = it->f < best.f - opts.f_tol;
    if (it->f < best.f) best = *it;
    if (!improved && round > 0) break;
  }
  result.x = best.x;
  result.value = best.f;
  return result;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(n, hw);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace entcap
