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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qdiag/error.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/qsim.hpp"
#include "qdiag/sparse_state.hpp"

namespace qdiag {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

QuantumCircuit program(std::size_t q, std::vector<QuantumGate> gates, std::vector<std::uint8_t> init = {}) {
  QuantumCircuit qc;
  qc.qubit_count = q;
  qc.init = init.empty() ? std::vector<std::uint8_t>(q, 0) : init;
  for (std::size_t k = 0; k < q; ++k) qc.labels.push_back("q" + std::to_string(k));
  qc.program = std::move(gates);
  return qc;
}

TEST(Qsim, HadamardOnZero) {
  StateVector s(1);
  apply_gate(s, QuantumGate::h(0));
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-12);
  apply_gate(s, QuantumGate::h(0));
  EXPECT_NEAR(s[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-12);
}

TEST(Qsim, XIsAnInvolution) {
  StateVector s(3);
  apply_gate(s, QuantumGate::x(1));
  EXPECT_EQ(s[2], Amplitude(1.0));
  apply_gate(s, QuantumGate::x(1));
  EXPECT_EQ(s[0], Amplitude(1.0));
}

TEST(Qsim, CnotOnTen) {
  // |10⟩ with qubit 0 leftmost: qubit 0 = 1, qubit 1 = 0.
  const auto s = run_statevector(program(2, {QuantumGate::cnot(0, 1)}, {1, 0}));
  EXPECT_EQ(s[3], Amplitude(1.0));
  const std::size_t both[] = {0, 1};
  EXPECT_EQ(basis_label(3, both), "11");
  EXPECT_EQ(basis_label(1, both), "10");
}

TEST(Qsim, CcnotTruthTable) {
  for (std::uint8_t a = 0; a < 2; ++a)
    for (std::uint8_t b = 0; b < 2; ++b) {
      const auto s = run_statevector(program(3, {QuantumGate::ccnot(0, 1, 2)}, {a, b, 0}));
      const std::size_t idx = a | (b << 1) | ((a & b) << 2);
      EXPECT_EQ(s[idx], Amplitude(1.0));
    }
}

TEST(Qsim, InverterDiagnosisState) {
  const auto c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  const auto qc = build_diagnosis_circuit(designate_assumables(c, {"i"}), {}, {{"o", true}});
  const auto s = run_statevector(qc);
  // (|01⟩ + |10⟩)/√2 with qubit 0 = i leftmost: indices 2 and 1.
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(s[2].real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[3]), 0.0, 1e-12);
  const std::size_t both[] = {0, 1};
  const auto d = exact_distribution(s, both);
  EXPECT_EQ(d.probability.size(), 2U);
  EXPECT_NEAR(d.probability.at("01"), 0.5, 1e-12);
  EXPECT_NEAR(d.probability.at("10"), 0.5, 1e-12);
}

TEST(Qsim, AndDiagnosisMarginal) {
  const auto c = parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)\n");
  const auto qc = build_diagnosis_circuit(designate_assumables(c, {"a", "b"}), {}, {{"y", false}});
  const auto s = run_statevector(qc);
  for (auto a : s.amplitudes()) EXPECT_TRUE(std::abs(a) < 1e-12 || std::abs(std::abs(a) - 0.5) < 1e-12);
  // Marginal over (a, combined output).
  const std::size_t sub[] = {qc.fault_qubits[0], *qc.output_qubit};
  const auto d = exact_distribution(s, sub);
  EXPECT_EQ(d.probability.size(), 3U);
  EXPECT_NEAR(d.probability.at("01"), 0.5, 1e-12);
  EXPECT_NEAR(d.probability.at("11"), 0.25, 1e-12);
  EXPECT_NEAR(d.probability.at("10"), 0.25, 1e-12);
}

TEST(Qsim, InvalidGatesAndCaps) {
  StateVector s(2);
  EXPECT_THROW(apply_gate(s, QuantumGate::x(2)), UsageError);
  EXPECT_THROW(apply_gate(s, QuantumGate::cnot(1, 1)), UsageError);
  EXPECT_THROW(run_statevector(program(27, {})), ResourceLimit);
  EXPECT_THROW(exact_distribution(s, std::span<const std::size_t>{}), UsageError);
}

std::vector<QuantumGate> random_program(std::mt19937_64& rng, std::size_t q, std::size_t len) {
  std::vector<QuantumGate> gs;
  while (gs.size() < len) {
    const auto a = rng() % q, b = rng() % q, c = rng() % q;
    switch (rng() % 4) {
      case 0: gs.push_back(QuantumGate::x(a)); break;
      case 1: gs.push_back(QuantumGate::h(a)); break;
      case 2:
        if (a != b) gs.push_back(QuantumGate::cnot(a, b));
        break;
      default:
        if (a != b && b != c && a != c) gs.push_back(QuantumGate::ccnot(a, b, c));
    }
  }
  return gs;
}

TEST(QsimProperty, NormalizationAndUnitarity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t q = 2 + rng() % 7;
    const auto gates = random_program(rng, q, 40);
    auto qc = program(q, gates);
    const auto s = run_statevector(qc, SimOptions{26, true});
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    // Every gate here is self-inverse: running the program backwards restores |0⟩.
    StateVector back = s;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_gate(back, *it);
    EXPECT_NEAR(std::abs(back[0]), 1.0, 1e-12);
    // Inner products are preserved on a second random start state.
    std::vector<Amplitude> amps(1U << q);
    double norm = 0;
    for (auto& a : amps) {
      a = Amplitude(static_cast<double>(rng() % 1000) - 500.0, static_cast<double>(rng() % 1000) - 500.0);
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    auto u = StateVector::from_amplitudes(amps);
    auto v = StateVector(q);
    Amplitude before{};
    for (std::size_t i = 0; i < u.size(); ++i) before += std::conj(u[i]) * v[i];
    for (const auto& g : gates) {
      apply_gate(u, g);
      apply_gate(v, g);
    }
    Amplitude after{};
    for (std::size_t i = 0; i < u.size(); ++i) after += std::conj(u[i]) * v[i];
    EXPECT_NEAR(std::abs(after - before), 0.0, 1e-12);
    EXPECT_NEAR(u.norm_squared(), 1.0, 1e-12);
  }
}

TEST(QsimProperty, SparseMatchesDense) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const std::size_t q = 2 + rng() % 9;
    const auto qc = program(q, random_program(rng, q, 30));
    const auto dense = run_statevector(qc);
    const auto sparse = run_sparse(qc);
    std::vector<Amplitude> from_sparse(dense.size());
    for (const auto& [key, amp] : sparse.entries()) from_sparse[key[0]] = amp;
    for (std::size_t i = 0; i < dense.size(); ++i) ASSERT_NEAR(std::abs(dense[i] - from_sparse[i]), 0.0, 1e-12);
  }
}

TEST(QsimProperty, AmplitudePatternOfDiagnosisCircuits) {
  for (auto [f, w] : {std::pair{Family::RippleAdder, 1}, {Family::Comparator, 1}, {Family::Multiplexer, 1}}) {
    const auto fc = augment_stuck_at_1(generate_benchmark(f, w));
    for (const auto& s : random_scenarios(fc, 3, 2, 8)) {
      const auto qc = build_diagnosis_circuit(fc, s.alpha, s.beta);
      const auto h = qc.count(QuantumGateKind::H);
      const double level = std::pow(2.0, -static_cast<double>(h) / 2.0);
      const auto dense = run_statevector(qc);
      std::size_t nonzero = 0;
      for (auto a : dense.amplitudes()) {
        const double m = std::abs(a);
        ASSERT_TRUE(m < 1e-9 || std::abs(m - level) < 1e-9) << m;
        nonzero += m > 1e-9;
      }
      EXPECT_EQ(nonzero, 1U << h);
    }
  }
}

TEST(QsimProperty, EnumerateAndSparseMatchDense) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  for (const auto& s : random_scenarios(fc, 4, 2, 31)) {
    const auto qc = build_diagnosis_circuit(fc, s.alpha, s.beta);
    const auto m = qc.measured_qubits();
    const auto dense = exact_distribution(run_statevector(qc), m);
    const auto sparse = exact_distribution(run_sparse(qc), m);
    const auto fast = enumerate_distribution(qc, m);
    ASSERT_EQ(dense.probability.size(), sparse.probability.size());
    ASSERT_EQ(dense.probability.size(), fast.probability.size());
    for (const auto& [label, p] : dense.probability) {
      EXPECT_NEAR(sparse.probability.at(label), p, 1e-12);
      EXPECT_NEAR(fast.probability.at(label), p, 1e-12);
    }
  }
}

TEST(QsimSampling, DeterministicBySeed) {
  Distribution d{{0, 1}, {{"00", 0.1}, {"01", 0.2}, {"10", 0.3}, {"11", 0.4}}};
  const auto a = sample(d, 200000, 77);
  const auto b = sample(d, 200000, 77);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.generator, "mt19937_64");
  EXPECT_NE(sample(d, 200000, 78).counts, a.counts);
  std::uint64_t total = 0;
  for (const auto& [k, v] : a.counts) total += v;
  EXPECT_EQ(total, 200000U);
}

TEST(QsimSampling, WithinThreeSigma) {
  Distribution d{{0, 1}, {{"00", 0.1}, {"01", 0.2}, {"10", 0.3}, {"11", 0.4}}};
  const std::uint64_t n = 100000;
  const auto h = sample(d, n, 5);
  for (const auto& [label, p] : d.probability) {
    const double sigma = std::sqrt(static_cast<double>(n) * p * (1 - p));
    EXPECT_LE(std::abs(static_cast<double>(h.counts.at(label)) - n * p), 3 * sigma) << label;
  }
}

TEST(QsimSampling, TotalVariationAtOneMillionShots) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const auto qc = build_diagnosis_circuit(fc, {{"i1", false}, {"i2", false}, {"ci", true}}, {{"sigma", true}, {"co", true}});
  const auto m = qc.measured_qubits();
  const auto exact = exact_distribution(run_sparse(qc), m);
  const auto h = sample(exact, 1000000, 2024);
  double tv = 0;
  for (const auto& [label, p] : exact.probability) {
    const auto it = h.counts.find(label);
    const double f = it == h.counts.end() ? 0.0 : static_cast<double>(it->second) / 1e6;
    tv += std::abs(f - p);
  }
  EXPECT_LT(tv / 2, 0.01);
}

TEST(QsimSampling, StateAndDistributionSamplingAgree) {
  const auto s = run_statevector(program(2, {QuantumGate::h(0), QuantumGate::cnot(0, 1)}));
  const std::size_t both[] = {0, 1};
  const auto h = sample(s, both, 1000, 9);
  EXPECT_EQ(h.counts.size(), 2U);
  EXPECT_EQ(h.counts, sample(exact_distribution(s, both), 1000, 9).counts);
}

}  // namespace
}  // namespace qdiag
