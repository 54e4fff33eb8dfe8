// Copyright 2026 The whsl Authors
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

#include "benchmark/benchmark.h"
#include "whsl/arith.h"
#include "whsl/dpd.h"
#include "whsl/enumerator.h"
#include "whsl/graded_ring.h"
#include "whsl/resolution.h"

namespace whsl {
namespace {

void BM_HilbertCoefficients(benchmark::State& state) {
  WeightedType wt(3, 11, 15, 33);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(HilbertCoefficients(wt, n));
  }
  state.SetItemsProcessed(state.iterations() * (n + 1));
}
BENCHMARK(BM_HilbertCoefficients)->Range(1 << 8, 1 << 16);

void BM_SearchDivisors(benchmark::State& state) {
  WeightedType wt(8, 9, 12, 36);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchDivisors(wt));
  }
}
BENCHMARK(BM_SearchDivisors);

void BM_Classify(benchmark::State& state) {
  ClassifyOptions options;
  options.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Classify(state.range(0), options));
  }
}
BENCHMARK(BM_Classify)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_NegativeDefinite(benchmark::State& state) {
  FractionalDivisor d(0, -1, {{1, 2}, {1, 2}, {1, state.range(0)}});
  IntegerMatrix m = IntersectionMatrix(BuildGraph(d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsNegativeDefinite(m));
  }
  state.SetComplexityN(static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_NegativeDefinite)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_HirzebruchJung(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t p = 1; p < 997; ++p) {
      benchmark::DoNotOptimize(HirzebruchJungExpansion(997, p));
    }
  }
}
BENCHMARK(BM_HirzebruchJung);

}  // namespace
}  // namespace whsl

BENCHMARK_MAIN();
