// Copyright 2026 The ngtmst Authors
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

#include <vector>

#include <benchmark/benchmark.h>

#include "ngtmst/fock_oracle.hpp"
#include "ngtmst/herald.hpp"
#include "ngtmst/sweep.hpp"
#include "ngtmst/teleport.hpp"
#include "ngtmst/truncated_series.hpp"

namespace {

using namespace ngtmst;

void BM_ExpQuadraticSeries(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Constant(8, 8, 0.1);
  const std::vector<int> caps(8, cap);
  for (auto _ : state) benchmark::DoNotOptimize(exp_quadratic_series(q, caps));
}
BENCHMARK(BM_ExpQuadraticSeries)->Arg(1)->Arg(2);

void BM_HeraldedState(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const HeraldSpec spec{k, k, k, k, 0.4, 0.4};
  const ThermalSqueezeParams params(0.5, 0.51);
  for (auto _ : state) benchmark::DoNotOptimize(normalized_char(spec, params).probability());
}
BENCHMARK(BM_HeraldedState)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Fidelity(benchmark::State& state) {
  const NgState s = normalized_char(HeraldSpec::symmetric(0, 2, 0.7), ThermalSqueezeParams(0.5, 0.51));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(s, CoherentInput{}));
}
BENCHMARK(BM_Fidelity)->Unit(benchmark::kMicrosecond);

void BM_TeleportReport(benchmark::State& state) {
  const ThermalSqueezeParams params(0.64, 0.51);
  for (auto _ : state) {
    benchmark::DoNotOptimize(report(HeraldSpec::symmetric(0, 1, 0.78), params, CoherentInput{}).product);
  }
}
BENCHMARK(BM_TeleportReport)->Unit(benchmark::kMicrosecond);

void BM_FockOracle(benchmark::State& state) {
  const ThermalSqueezeParams params(0.64, 0.51);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::herald_oracle(HeraldSpec::symmetric(0, 1, 0.78), params).probability);
  }
}
BENCHMARK(BM_FockOracle)->Unit(benchmark::kMillisecond);

void BM_Table1(benchmark::State& state) {
  OptimizerSettings settings;
  settings.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table1(settings).size());
}
BENCHMARK(BM_Table1)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
