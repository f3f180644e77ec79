// Copyright 2026 The pdslab Authors
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

// Serial reference scan vs the OpenMP scan of the exhaustive oracle.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "pdslab/detail/subset_kernel.h"
#include "pdslab/oracle.h"

namespace pdslab {
namespace {

// A perfect matching has no connected PDS above size 2, so every scan runs
// over its whole rank range.
Graph BenchGraph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

void BM_Oracle(benchmark::State& state, Execution execution) {
  const Graph g = BenchGraph(static_cast<int>(state.range(0)));
  OracleOptions options;
  options.execution = execution;
  options.connected = true;
  options.min_size = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxPdsBruteforce(g, options).size);
  }
}

void BM_OracleSerial(benchmark::State& state) { BM_Oracle(state, Execution::kSerial); }
void BM_OracleParallel(benchmark::State& state) { BM_Oracle(state, Execution::kParallel); }

void BM_FirstHit(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const detail::MaskGraph g(BenchGraph(n));
  // Half-size subsets: the widest level of the scan.
  const int k = n / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? detail::FirstHitParallel(g, k, true)
                                      : detail::FirstHitSerial(g, k, true));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(detail::Binomial(n, k)));
}

void BM_FirstHitSerial(benchmark::State& state) { BM_FirstHit(state, false); }
void BM_FirstHitParallel(benchmark::State& state) { BM_FirstHit(state, true); }

BENCHMARK(BM_OracleSerial)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FirstHitSerial)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstHitParallel)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace pdslab

BENCHMARK_MAIN();
