// Copyright 2026 The Oloid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "oloid/elliptic.hpp"
#include "oloid/mesh.hpp"
#include "oloid/montecarlo.hpp"
#include "oloid/quadrature.hpp"

namespace {

const oloid::OloidSpec kUnit{};

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::closed_form_properties(kUnit));
  }
}
BENCHMARK(BM_ClosedForm);

void BM_Quadrature(benchmark::State& state) {
  oloid::QuadratureConfig cfg;
  cfg.t_levels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::quadrature_mass_properties(kUnit, cfg));
  }
}
BENCHMARK(BM_Quadrature)->Arg(6)->Arg(8)->Arg(10);

void BM_MonteCarlo(benchmark::State& state) {
  oloid::McConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::mc_mass_properties(kUnit, cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.samples));
}
BENCHMARK(BM_MonteCarlo)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Tessellate(benchmark::State& state) {
  oloid::MeshConfig cfg;
  cfg.n_m = static_cast<int>(state.range(0));
  cfg.n_t = 2 * cfg.n_m;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::tessellate(kUnit, cfg));
  }
}
BENCHMARK(BM_Tessellate)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_MeshMassProperties(benchmark::State& state) {
  oloid::MeshConfig cfg;
  cfg.n_m = static_cast<int>(state.range(0));
  cfg.n_t = 2 * cfg.n_m;
  const oloid::TriangleMesh mesh = oloid::tessellate(kUnit, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::mesh_mass_properties(mesh, 1.0));
  }
}
BENCHMARK(BM_MeshMassProperties)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-1.5, 1.5);
  std::uniform_real_distribution<double> uy(-1.0, 1.0);
  std::vector<oloid::Vec3> points;
  points.reserve(1024);
  for (int i = 0; i < 1024; ++i) {
    points.push_back(oloid::Vec3{ux(rng), uy(rng), uy(rng)});
  }
  oloid::McConfig cfg;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oloid::contains(points[i++ & 1023], kUnit, cfg, 1e-9));
  }
}
BENCHMARK(BM_Membership);

void BM_MembershipExact(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-1.5, 1.5);
  std::uniform_real_distribution<double> uy(-1.0, 1.0);
  std::vector<oloid::Vec3> points;
  points.reserve(1024);
  for (int i = 0; i < 1024; ++i) {
    points.push_back(oloid::Vec3{ux(rng), uy(rng), uy(rng)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oloid::contains_exact(points[i++ & 1023], kUnit));
  }
}
BENCHMARK(BM_MembershipExact);

}  // namespace

BENCHMARK_MAIN();
