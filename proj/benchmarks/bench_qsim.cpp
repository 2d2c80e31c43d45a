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

#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/qsim.hpp"
#include "qdiag/sparse_state.hpp"

namespace {

using namespace qdiag;

// One gate on a dense state of state.range(0) qubits, target in the middle.
void BM_DenseGate(benchmark::State& state, QuantumGateKind kind) {
  const auto q = static_cast<std::size_t>(state.range(0));
  StateVector s(q);
  apply_gate(s, QuantumGate::h(0));
  const auto mid = q / 2;
  QuantumGate g{kind, {0, q - 1}, mid};
  for (auto _ : state) {
    apply_gate(s, g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(s.size()) *
                          static_cast<std::int64_t>(sizeof(Amplitude)));
}
BENCHMARK_CAPTURE(BM_DenseGate, x, QuantumGateKind::X)->DenseRange(12, 24, 4);
BENCHMARK_CAPTURE(BM_DenseGate, h, QuantumGateKind::H)->DenseRange(12, 24, 4);
BENCHMARK_CAPTURE(BM_DenseGate, cnot, QuantumGateKind::CNOT)->DenseRange(12, 24, 4);
BENCHMARK_CAPTURE(BM_DenseGate, ccnot, QuantumGateKind::CCNOT)->DenseRange(12, 24, 4);

struct Prepared {
  QuantumCircuit qc;
  std::vector<std::size_t> measured;
};

Prepared diagnosis(Family f, int width) {
  const auto fc = augment_stuck_at_1(generate_benchmark(f, width));
  const auto s = random_scenarios(fc, 1, 2, 7).front();
  auto qc = build_diagnosis_circuit(fc, s.alpha, s.beta, CompileOptions{SparseState::kMaxQubits});
  auto m = qc.measured_qubits();
  return {std::move(qc), std::move(m)};
}

void BM_DenseDiagnosisFullAdder(benchmark::State& state) {
  const auto p = diagnosis(Family::RippleAdder, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(run_statevector(p.qc), p.measured));
}
BENCHMARK(BM_DenseDiagnosisFullAdder)->Unit(benchmark::kMillisecond);

void BM_SparseDiagnosis(benchmark::State& state) {
  const auto p = diagnosis(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(run_sparse(p.qc), p.measured));
  state.counters["qubits"] = static_cast<double>(p.qc.qubit_count);
}
BENCHMARK(BM_SparseDiagnosis)
    ->Args({static_cast<int>(Family::RippleAdder), 1})
    ->Args({static_cast<int>(Family::RippleAdder), 2})
    ->Args({static_cast<int>(Family::Comparator), 2})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateDiagnosis(benchmark::State& state) {
  const auto p = diagnosis(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_distribution(p.qc, p.measured));
}
BENCHMARK(BM_EnumerateDiagnosis)
    ->Args({static_cast<int>(Family::RippleAdder), 1})
    ->Args({static_cast<int>(Family::RippleAdder), 2})
    ->Args({static_cast<int>(Family::Comparator), 2})
    ->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  const auto p = diagnosis(Family::RippleAdder, 2);
  const auto dist = enumerate_distribution(p.qc, p.measured);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(dist, static_cast<std::uint64_t>(state.range(0)), ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Range(1 << 10, 1 << 20);

}  // namespace
