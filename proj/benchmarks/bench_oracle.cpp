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

#include <entcap/canonical.hpp>
#include <entcap/oracle.hpp>

namespace {

using namespace entcap;

SearchConfig config(benchmark::State& state) {
  SearchConfig cfg;
  cfg.coarse_grid_per_angle = static_cast<int>(state.range(0));
  cfg.restarts = 8;
  return cfg;
}

void BM_MaxConcurrenceProduct(benchmark::State& state) {
  Rng rng(1);
  const Matrix4 u = haar_random4(rng);
  const SearchConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(max_concurrence_product(u, cfg));
}
BENCHMARK(BM_MaxConcurrenceProduct)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MaxDeltaConcurrence(benchmark::State& state) {
  Rng rng(2);
  const Matrix4 u = haar_random4(rng);
  const SearchConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(max_delta_concurrence(u, cfg));
}
BENCHMARK(BM_MaxDeltaConcurrence)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MinProbeOverlap(benchmark::State& state) {
  const Matrix4 ud = canonical_unitary({0.5, 0.2, 0.1});
  const UnitaryMatrix v(Matrix4(ud * ud));
  const SearchConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(min_probe_overlap(v, cfg));
}
BENCHMARK(BM_MinProbeOverlap)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace
