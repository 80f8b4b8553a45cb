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

#include <benchmark/benchmark.h>

#include <vector>

#include <entcap/canonical.hpp>

namespace {

using namespace entcap;

std::vector<Matrix4> haar_batch(std::size_t n) {
  Rng rng(42);
  std::vector<Matrix4> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(haar_random4(rng));
  return out;
}

void BM_CartanDecompose(benchmark::State& state) {
  const auto batch = haar_batch(256);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cartan_decompose(batch[k++ % batch.size()]));
  }
}
BENCHMARK(BM_CartanDecompose);

void BM_CanonicalUnitary(benchmark::State& state) {
  const WeylVector d{0.6, 0.3, -0.1};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_unitary(d));
}
BENCHMARK(BM_CanonicalUnitary);

void BM_HaarSample(benchmark::State& state) {
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(haar_random4(rng));
}
BENCHMARK(BM_HaarSample);

void BM_EigUnitary(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_unitary(Eigen::MatrixXcd(batch[k++ % batch.size()])));
  }
}
BENCHMARK(BM_EigUnitary);

}  // namespace

BENCHMARK_MAIN();
