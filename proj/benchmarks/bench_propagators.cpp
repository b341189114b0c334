// Copyright 2026 The nestpulse Authors
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

#include "nestpulse/error_analysis.hpp"
#include "nestpulse/sequences.hpp"

using namespace nestpulse;

namespace {

template <Real T>
void BM_Propagator(benchmark::State& state) {
  PrecisionScope scope(std::is_same_v<T, double> ? kDoubleDigits : 60);
  const auto seq = fn_phases<T>(static_cast<int>(state.range(0)));
  const ErrorModel<T> err{from_decimal<T>("0.01"), T(0)};
  for (auto _ : state) benchmark::DoNotOptimize(sequence_propagator(seq, err));
  state.counters["pulses"] = static_cast<double>(seq.size());
}

void BM_OrderFitF1(benchmark::State& state) {
  const auto seq = fn_phases<double>(1);
  for (auto _ : state) benchmark::DoNotOptimize(infidelity_order(seq, ErrorKind::kAmplitude));
}

void BM_GeneratorTaylorF2(benchmark::State& state) {
  PrecisionScope scope(60);
  const auto seq = fn_phases<HighPrecision>(2);
  for (auto _ : state) benchmark::DoNotOptimize(generator_taylor(seq, ErrorKind::kAmplitude, 8));
}

}  // namespace

BENCHMARK(BM_Propagator<double>)->DenseRange(1, 4);
BENCHMARK(BM_Propagator<HighPrecision>)->DenseRange(1, 3);
BENCHMARK(BM_OrderFitF1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorTaylorF2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
