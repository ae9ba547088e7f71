// Copyright 2026 The picard-cycles Authors
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

#include <random>

#include "picard/big_pairing.hpp"
#include "picard/cogdell_series.hpp"
#include "picard/hida.hpp"
#include "picard/level_groups.hpp"
#include "picard/qexp.hpp"
#include "picard/rng.hpp"

namespace {

using namespace picard;

void BM_CuspSeries(benchmark::State& state) {
  const FieldCtx k = FieldCtx::make(7);
  const SeriesParams p = standard_params(k, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cusp_series(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CuspSeries)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_HigherWeight(benchmark::State& state) {
  const FieldCtx k = FieldCtx::make(11);
  SeriesParams p = standard_params(k, 2000);
  p.weight_k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(higher_weight_series(p));
}
BENCHMARK(BM_HigherWeight)->DenseRange(1, 3);

void BM_ModularityCheck(benchmark::State& state) {
  const QExpansion f = eisenstein3(FieldCtx::make(7), state.range(0));
  ModularityOptions o;
  o.max_c_multiple = 1;
  for (auto _ : state) benchmark::DoNotOptimize(modularity_check(f, o));
}
BENCHMARK(BM_ModularityCheck)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_EtaProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eta_product({{1, 3}, {7, 3}}, state.range(0)));
}
BENCHMARK(BM_EtaProduct)->Arg(400)->Arg(4000);

void BM_HeckeT(benchmark::State& state) {
  const QExpansion f = eisenstein3(FieldCtx::make(7), 13 * 1000);
  for (auto _ : state) benchmark::DoNotOptimize(hecke_T(f, state.range(0)));
}
BENCHMARK(BM_HeckeT)->Arg(2)->Arg(13);

void BM_OrdinaryProjector(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng = make_rng(1);
  IntMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = static_cast<long>(rng() % 1000);
  const FiniteUpModel model = make_model(PadicCtx::make(5, 12), a);
  for (auto _ : state) benchmark::DoNotOptimize(ordinary_projector(model));
}
BENCHMARK(BM_OrdinaryProjector)->DenseRange(2, 8, 3);

void BM_EisensteinSpecialize(benchmark::State& state) {
  const FieldCtx k = FieldCtx::make(7);
  const LambdaFamily fam = eisenstein_family(k, PadicCtx::make(11, 8, k), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specialize(fam, ArithPoint{113}, state.range(0)));
}
BENCHMARK(BM_EisensteinSpecialize)->Arg(200)->Arg(2000);

void BM_VerifyGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_gamma(3, static_cast<int>(state.range(0)), 1000, 7));
}
BENCHMARK(BM_VerifyGamma)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Lemma46(benchmark::State& state) {
  const FieldCtx k = FieldCtx::make(11);
  Lemma46Options o;
  o.s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemma46_check(k, o));
}
BENCHMARK(BM_Lemma46)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PairR(benchmark::State& state) {
  RegularModelOptions o;
  o.max_level = static_cast<int>(state.range(0));
  const PairingContext ctx = regular_context(o);
  const int r = o.max_level;
  std::mt19937_64 rng = make_rng(2);
  ModVec x(ctx.level(r).dim()), y(ctx.level(r).dim());
  for (auto& v : x) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus));
  for (auto& v : y) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus));
  for (auto _ : state) benchmark::DoNotOptimize(pair_r(ctx, r, x, y));
}
BENCHMARK(BM_PairR)->DenseRange(2, 4);

void BM_BindSeries(benchmark::State& state) {
  const FieldCtx k = FieldCtx::make(7);
  const SeriesParams p = standard_params(k, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bind_series(p, 11, 8, 2));
}
BENCHMARK(BM_BindSeries)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
