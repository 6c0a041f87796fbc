// Copyright 2026 The uniwiener Authors
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

#include "uniwiener/canonical.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/enumeration.hpp"

namespace {

using namespace uniwiener;

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unicyclic_serial(n));
}
BENCHMARK(BM_EnumerateSerial)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unicyclic(n));
}
BENCHMARK(BM_EnumerateParallel)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

void BM_ClassifyParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(n));
}
BENCHMARK(BM_ClassifyParallel)->DenseRange(9, 12)->Unit(benchmark::kMillisecond);

void BM_WienerSerial(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(wiener(g));
}
BENCHMARK(BM_WienerSerial)->RangeMultiplier(4)->Range(64, 4096);

void BM_WienerOmp(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(wiener_omp(g));
}
BENCHMARK(BM_WienerOmp)->RangeMultiplier(4)->Range(64, 4096);

void BM_CanonicalCode(benchmark::State& state) {
  const auto graphs = enumerate_unicyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : graphs) benchmark::DoNotOptimize(canonical_code(c.graph.graph()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalCode)->DenseRange(8, 11);

}  // namespace

BENCHMARK_MAIN();
