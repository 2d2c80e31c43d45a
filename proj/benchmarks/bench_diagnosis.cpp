// Copyright 2026 The qdiag Authors
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

#include "qdiag/diagnose.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/satdiag.hpp"

namespace {

using namespace qdiag;

void BM_FullAdderSat(benchmark::State& state) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const Assignment alpha{{"i1", false}, {"i2", false}, {"ci", true}};
  const Assignment beta{{"sigma", true}, {"co", true}};
  for (auto _ : state) benchmark::DoNotOptimize(circuit_health_sat(fc, alpha, beta));
}
BENCHMARK(BM_FullAdderSat);

// AllSAT enumeration cost grows with the number of diagnoses d.
void BM_SatEnumeration(benchmark::State& state) {
  const auto fc = augment_stuck_at_1(generate_benchmark(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1))));
  const auto s = random_scenarios(fc, 1, 2, 3).front();
  std::uint64_t d = 0;
  for (auto _ : state) d = circuit_health_sat(fc, s.alpha, s.beta).diagnoses();
  state.counters["diagnoses"] = static_cast<double>(d);
  state.counters["faults"] = static_cast<double>(fc.fault_inputs.size());
}
BENCHMARK(BM_SatEnumeration)
    ->Args({static_cast<int>(Family::RippleAdder), 2})
    ->Args({static_cast<int>(Family::Multiplier), 2})
    ->Args({static_cast<int>(Family::MultioperandAdder), 2})
    ->Unit(benchmark::kMillisecond);

void BM_QuantumDiagnoseShots(benchmark::State& state) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 2));
  const auto s = random_scenarios(fc, 1, 2, 1).front();
  QuantumOptions q;
  q.shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    ++q.seed;
    benchmark::DoNotOptimize(quantum_diagnose(fc, s.alpha, s.beta, q));
  }
}
BENCHMARK(BM_QuantumDiagnoseShots)->Arg(1 << 10)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
