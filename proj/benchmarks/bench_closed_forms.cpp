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

#include <entcap/distinguishability.hpp>
#include <entcap/entanglement.hpp>

namespace {

using namespace entcap;

std::vector<WeylVector> weyl_batch() {
  Rng rng(3);
  std::vector<WeylVector> out;
  for (int k = 0; k < 256; ++k) out.push_back(random_weyl_vector(rng));
  return out;
}

void BM_CapacitiesClosedForm(benchmark::State& state) {
  const auto batch = weyl_batch();
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(capacities_closed_form(batch[k++ % 256]));
}
BENCHMARK(BM_CapacitiesClosedForm);

void BM_DminCanonical(benchmark::State& state) {
  const auto batch = weyl_batch();
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d_min_canonical(batch[k++ % 256]));
}
BENCHMARK(BM_DminCanonical);

void BM_HullMinDistance(benchmark::State& state) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<double> phases(static_cast<std::size_t>(state.range(0)));
  for (double& p : phases) p = u(rng) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(hull_min_distance(phases));
}
BENCHMARK(BM_HullMinDistance)->Arg(4)->Arg(64)->Arg(1024);

void BM_VerifyTheorem(benchmark::State& state) {
  const auto batch = weyl_batch();
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(batch[k++ % 256]));
}
BENCHMARK(BM_VerifyTheorem);

void BM_Concurrence(benchmark::State& state) {
  Rng rng(9);
  const PureState psi = random_pure_state(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(psi));
}
BENCHMARK(BM_Concurrence);

}  // namespace
