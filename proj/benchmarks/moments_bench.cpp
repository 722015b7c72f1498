// Copyright 2026 The cavem Authors
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


// Moment equations, Lyapunov solve and the closed-form map.

#include <vector>

#include <benchmark/benchmark.h>

#include "cavem/closedform.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/model.hpp"

namespace {

using namespace cavem;

void BM_Propagator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closedform::propagator(1.0, 2.0, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Propagator);

void BM_DriftDiffusion(benchmark::State& state) {
  const auto spec = model::two_mr_system(1, 2, 15, 15, 0.01, 0.08, 0.08);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian::drift_diffusion(spec));
  }
}
BENCHMARK(BM_DriftDiffusion);

void BM_LyapunovTwoMr(benchmark::State& state) {
  const auto dd =
      gaussian::drift_diffusion(model::two_mr_system(1, 2, 15, 15, 0.01, 0.08, 0.08));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian::lyapunov_steady(dd));
  }
}
BENCHMARK(BM_LyapunovTwoMr)->Unit(benchmark::kMicrosecond);

void BM_EvolveMomentsTwoMr(benchmark::State& state) {
  const auto dd =
      gaussian::drift_diffusion(model::two_mr_system(1, 2, 15, 15, 0.01, 0.08, 0.08));
  const auto g0 = gaussian::GaussianState::thermal(std::vector<double>(4, 0.0));
  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(0.5 * k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian::evolve_moments(dd, g0, grid));
  }
}
BENCHMARK(BM_EvolveMomentsTwoMr)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
