// Copyright 2026 The mqanneal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "mqanneal/anneal.hpp"
#include "mqanneal/embed.hpp"
#include "mqanneal/nnf.hpp"
#include "mqanneal/quadratize.hpp"

namespace {

using namespace mqanneal;

// XOR of n variables: the worst case for the integer-form conversion.
AnfPoly xor_chain(std::uint32_t n) {
  AnfPoly p;
  for (VarId v = 0; v < n; ++v) p.toggle(Monomial::var(v));
  return p;
}

void BM_AnfToNnf(benchmark::State& state) {
  const AnfPoly p = xor_chain(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(anf_to_nnf(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AnfToNnf)->DenseRange(8, 18, 2)->Complexity();

void BM_ReduceToQuadratic(benchmark::State& state) {
  const IntPoly f = anf_to_nnf(xor_chain(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce_to_quadratic(f));
}
BENCHMARK(BM_ReduceToQuadratic)->DenseRange(6, 12, 2);

void BM_EmbedTruncated(benchmark::State& state) {
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  const MQSystem s = generate_planted(n, n, 17).system;
  for (auto _ : state)
    benchmark::DoNotOptimize(embed_truncated(s, 4));
}
BENCHMARK(BM_EmbedTruncated)->DenseRange(4, 16, 4);

void BM_AnnealSweeps(benchmark::State& state) {
  const MQSystem s = generate_planted(8, 8, 23).system;
  const Embedding emb = embed_truncated(s, 4);
  AnnealParams params;
  params.reads = 8;
  params.sweeps = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample(emb.qubo, params));
  state.SetItemsProcessed(state.iterations() * params.reads * params.sweeps *
                          emb.qubo.n_vars);
}
BENCHMARK(BM_AnnealSweeps)->RangeMultiplier(4)->Range(64, 1024);

void BM_ExactGround(benchmark::State& state) {
  const MQSystem s =
      generate_planted(static_cast<std::uint32_t>(state.range(0)), 6, 29).system;
  const Embedding emb = embed_direct(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_ground(emb.qubo));
}
BENCHMARK(BM_ExactGround)->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
