// Copyright 2026 The ebx Authors
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

#include <benchmark/benchmark.h>

#include "ebx/convex_decomp.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/extremality.hpp"

namespace ebx {
namespace {

const Tolerance kTol;

void BM_ChoiRank(benchmark::State& state) {
  const Index d = state.range(0);
  SeededRng rng(1);
  const Channel ch = random_unital_eb(rng, d, d, d * d);
  for (auto _ : state) benchmark::DoNotOptimize(choi_rank(ch, kTol));
}
BENCHMARK(BM_ChoiRank)->DenseRange(2, 6, 2);

void BM_ExtractCanonical(benchmark::State& state) {
  const Index d = state.range(0);
  SeededRng rng(2);
  const Channel ch = random_cstar_extreme(rng, d, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(extract_canonical(ch, kTol));
}
BENCHMARK(BM_ExtractCanonical)->DenseRange(2, 6, 2);

void BM_KmDecompose(benchmark::State& state) {
  const Index d = state.range(0);
  SeededRng rng(3);
  const Channel ch = random_unital_eb(rng, d, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(km_decompose(ch, kTol));
}
BENCHMARK(BM_KmDecompose)->DenseRange(2, 6, 2);

void BM_PptVerdict(benchmark::State& state) {
  const Index d = state.range(0);
  SeededRng rng(4);
  const Channel ch = random_unital_eb(rng, d, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(ch, kTol));
}
BENCHMARK(BM_PptVerdict)->DenseRange(2, 6, 2);

}  // namespace
}  // namespace ebx

BENCHMARK_MAIN();
