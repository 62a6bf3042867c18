/*
 * Copyright 2026 The SIPA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "sipa/sipa.hpp"

namespace {

using namespace sipa;

Dataset make_data(std::size_t n, std::size_t p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z;
  std::vector<std::vector<double>> cols(p, std::vector<double>(n));
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < p; ++j) {
      cols[j][i] = z(gen);
      s += (j + 1.0) * cols[j][i];
    }
    y[i] = s + 0.1 * z(gen);
  }
  return Dataset::from_columns(cols, y);
}

void BM_PdCurve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dataset d = make_data(n, 4, 1);
  const auto model = refmodels::fit_linear(d);
  const auto h = model.handle().with_threads(static_cast<std::size_t>(state.range(1)));
  const Grid grid = Grid::equidistant(d, 0, 50);
  for (auto _ : state) benchmark::DoNotOptimize(pd_curve(h, d, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * 50));
}
BENCHMARK(BM_PdCurve)->Args({100, 1})->Args({1000, 1})->Args({1000, 4});

void BM_ShapleyExact(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const Dataset d = make_data(50, p, 2);
  const auto model = refmodels::fit_knn(d, 5);
  const auto x = d.row(0);
  for (auto _ : state) benchmark::DoNotOptimize(shapley_exact(model.handle(), d, x));
}
BENCHMARK(BM_ShapleyExact)->DenseRange(2, 8, 2);

void BM_ShapleyMc(benchmark::State& state) {
  const Dataset d = make_data(50, 8, 3);
  const auto model = refmodels::fit_knn(d, 5);
  const auto x = d.row(0);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shapley_mc(model.handle(), d, x, 0, m, 7));
}
BENCHMARK(BM_ShapleyMc)->Arg(1000)->Arg(4000);

void BM_PfiExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dataset d = make_data(n, 3, 4);
  const auto model = refmodels::fit_linear(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfi_exhaustive(model.handle(), d, 0, LossFunction::squared()));
  }
}
BENCHMARK(BM_PfiExhaustive)->Arg(50)->Arg(200);

void BM_Ale(benchmark::State& state) {
  const Dataset d = make_data(2000, 3, 5);
  const auto model = refmodels::fit_stump(d);
  for (auto _ : state) benchmark::DoNotOptimize(ale_first_order(model.handle(), d, 0, 20));
}
BENCHMARK(BM_Ale);

}  // namespace

BENCHMARK_MAIN();
