// Copyright 2026 The etaq Authors
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

#include "etaq/congruence.hpp"
#include "etaq/identities.hpp"
#include "etaq/modforms.hpp"
#include "etaq/qseries.hpp"

namespace {

using namespace etaq;

void BM_SeriesMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = eta_pow_fractional(FracExponent(-1, 2), n);
  const auto g = eta_pow_fractional(FracExponent(1, 3), n);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SeriesMulInteger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = series_pow_int(euler_product(n), 5);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(f, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMulInteger)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EtaPowFractional(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_pow_fractional(FracExponent(-1, 2), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EtaPowFractional)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ResidueSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const arith::PrimePower m(7, 4);
  for (auto _ : state) benchmark::DoNotOptimize(congruence::residue_series_pk(FracExponent(-1, 2), m, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ResidueSeries)->RangeMultiplier(2)->Range(1024, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ResidueSeriesWide(benchmark::State& state) {
  // Modulus above 2^32 exercises the 128-bit accumulation path.
  const auto n = static_cast<std::size_t>(state.range(0));
  const arith::PrimePower m(7, 20);
  for (auto _ : state) benchmark::DoNotOptimize(congruence::residue_series_pk(FracExponent(-1, 2), m, n));
}
BENCHMARK(BM_ResidueSeriesWide)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Identity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(identities::expand_eta(d, 500));
}
BENCHMARK(BM_Identity)->Arg(4)->Arg(10)->Arg(14)->Arg(26)->Unit(benchmark::kMillisecond);

void BM_ModularProof(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(modforms::modular_proof_289(3000));
}
BENCHMARK(BM_ModularProof)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
