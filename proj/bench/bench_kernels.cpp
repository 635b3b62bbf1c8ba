/*
 *   Copyright 2026 The zetaren Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file bench_kernels.cpp
 * @brief Serial reference against the OpenMP block sum for spectral kernels and grid evaluation.
 */

#include <benchmark/benchmark.h>

#include "zetaren/kernels.hpp"
#include "zetaren/observables.hpp"

using namespace zetaren;

namespace {

KernelFunction neumann_kernel() {
  return spectral_cylinder(SpectralModel::segment(1.0, BoundaryCondition::Neumann), {}, 1e-15);
}

void BM_SpectralSerial(benchmark::State& state) {
  const auto k = neumann_kernel();
  const double t = 1.0 / double(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k.evaluate_serial(t, {0.3}, {0.31}));
  state.counters["terms"] = double(k.terms_needed(t));
}

void BM_SpectralParallel(benchmark::State& state) {
  const auto k = neumann_kernel();
  const double t = 1.0 / double(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k.evaluate_parallel(t, {0.3}, {0.31}));
  state.counters["terms"] = double(k.terms_needed(t));
  state.counters["workers"] = worker_count();
}

void BM_StressGrid(benchmark::State& state) {
  const ObservableRequest req{DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet), 0.2, {}, 1.0};
  for (auto _ : state)
    for (int i = 1; i < 20; ++i) benchmark::DoNotOptimize(stress_energy(req, i / 20.0));
}

}  // namespace

BENCHMARK(BM_SpectralSerial)->Arg(10)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SpectralParallel)->Arg(10)->Arg(1000)->Arg(10000);
BENCHMARK(BM_StressGrid);

BENCHMARK_MAIN();
