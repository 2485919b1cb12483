// Copyright 2026 The entgeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "entgeo/geometry.hpp"
#include "entgeo/projection.hpp"
#include "entgeo/states.hpp"

namespace {

using namespace entgeo;

void BM_EigHermitian(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto rho = sample_hs_random(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(rho.matrix()));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(8)->Arg(16);

void BM_ClosestPtState(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto rho = sample_hs_random(n, 12);
  for (auto _ : state) benchmark::DoNotOptimize(closest_pt_state(rho));
}
BENCHMARK(BM_ClosestPtState)->Arg(4)->Arg(8);

void BM_ProjectSimplex(benchmark::State& state) {
  const std::vector<double> d{2.0 / 3, 0.47, 1.0 / 3, 0, 0, 0, 0, -0.47};
  for (auto _ : state) benchmark::DoNotOptimize(project_simplex_psd(d));
}
BENCHMARK(BM_ProjectSimplex);

void BM_ScanPlane(benchmark::State& state) {
  const Plane plane = make_named_plane(NamedPlane::ff1);
  const AxisRange axis{-0.9, 0.9, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(scan_plane(plane, axis, axis, 1));
}
BENCHMARK(BM_ScanPlane)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
