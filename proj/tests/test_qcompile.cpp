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

#include <random>

#include "oracles.hpp"
#include "qdiag/error.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/qsim.hpp"

namespace qdiag {
namespace {

using K = QuantumGateKind;

const Circuit& inverter() {
  static const Circuit c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  return c;
}

TEST(Qcompile, InverterOracle) {
  const auto qc = make_oracle(inverter());
  EXPECT_EQ(qc.qubit_count, 2U);
  EXPECT_EQ(qc.labels, (std::vector<std::string>{"i", "o"}));
  EXPECT_EQ(qc.init, (std::vector<std::uint8_t>{0, 1}));
  EXPECT_EQ(qc.program, (std::vector<QuantumGate>{QuantumGate::cnot(0, 1)}));
  EXPECT_EQ(qc.gate_count(), 2U);
}

TEST(Qcompile, AndOracle) {
  const auto qc = make_oracle(parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)\n"));
  EXPECT_EQ(qc.qubit_count, 3U);
  EXPECT_EQ(qc.init, (std::vector<std::uint8_t>{0, 0, 0}));
  EXPECT_EQ(qc.program, (std::vector<QuantumGate>{QuantumGate::ccnot(0, 1, 2)}));
}

TEST(Qcompile, OrAndXorGadgets) {
  const auto orc = make_oracle(parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = OR(a, b)\n"));
  EXPECT_EQ(orc.init[2], 1);
  EXPECT_EQ(orc.program.size(), 5U);
  EXPECT_EQ(orc.count(K::CCNOT), 1U);
  EXPECT_EQ(orc.count(K::X), 5U);  // init + 4 input flips
  const auto xorc = make_oracle(parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = XOR(a, b)\n"));
  EXPECT_EQ(xorc.program, (std::vector<QuantumGate>{QuantumGate::cnot(0, 2), QuantumGate::cnot(1, 2)}));
}

TEST(Qcompile, GateCountLaw) {
  for (auto f : kAllFamilies) {
    for (int w : {1, 2, 3}) {
      Circuit c = parse_bench("INPUT(a)\nOUTPUT(a)\n");
      try {
        c = generate_benchmark(f, w);
      } catch (const UsageError&) {
        continue;
      }
      std::size_t expect = 0, nots = 0, ors = 0;
      for (const auto& g : c.gates()) {
        switch (g.kind) {
          case GateKind::Not: expect += 2; ++nots; break;
          case GateKind::And2: expect += 1; break;
          case GateKind::Xor2: expect += 2; break;
          case GateKind::Or2: expect += 6; ++ors; break;
        }
      }
      const auto qc = make_oracle(c, CompileOptions{256});
      EXPECT_EQ(qc.gate_count(), expect) << to_string(f) << w;
      EXPECT_EQ(qc.qubit_count, c.inputs().size() + c.gates().size());
      EXPECT_EQ(qc.count(K::X), nots + 5 * ors);
    }
  }
}

TEST(Qcompile, QubitCap) {
  const auto c = generate_benchmark(Family::RippleAdder, 4);
  EXPECT_THROW(make_oracle(c), ResourceLimit);
  EXPECT_NO_THROW(make_oracle(c, CompileOptions{64}));
}

TEST(Qcompile, CombineOutputs) {
  const auto c = generate_benchmark(Family::RippleAdder, 1);
  EXPECT_EQ(combine_outputs(c, {{"sigma", true}, {"co", false}}).outputs().size(), 1U);
  const auto single = parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)\n");
  EXPECT_EQ(combine_outputs(single, {{"y", true}}), single);
  for (int beta = 0; beta < 4; ++beta) {
    const Assignment b{{"sigma", beta & 1}, {"co", (beta >> 1) & 1}};
    const auto comb = combine_outputs(c, b);
    const auto o = comb.outputs()[0];
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
      const auto in = oracle::unpack(c.inputs(), bits);
      const auto ref = oracle::sweep_eval(c, in);
      const auto got = oracle::sweep_eval(comb, in);
      EXPECT_EQ(got.at(o), ref.at("sigma") == b.at("sigma") && ref.at("co") == b.at("co"));
    }
  }
}

TEST(Qcompile, FullAdderDiagnosisCircuit) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const Assignment alpha{{"i1", false}, {"i2", false}, {"ci", true}};
  const Assignment beta{{"sigma", true}, {"co", true}};
  const auto oracle = make_oracle(fc.circuit);
  EXPECT_EQ(oracle.qubit_count, 18U);
  const auto qc = build_diagnosis_circuit(fc, alpha, beta);
  EXPECT_EQ(qc.qubit_count, 19U);
  EXPECT_EQ(diagnosis_qubit_count(fc, beta), 19U);
  EXPECT_EQ(qc.count(K::H), 5U);
  EXPECT_EQ(qc.fault_qubits.size(), 5U);
  ASSERT_TRUE(qc.output_qubit.has_value());
  EXPECT_EQ(qc.init[qc.wire_map.at("ci")], 1);
  EXPECT_EQ(qc.init[qc.wire_map.at("i1")], 0);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(qc.labels[qc.fault_qubits[k]], fc.fault_inputs[k]);
  // Hadamards come first and touch only fault qubits.
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(qc.program[k], QuantumGate::h(qc.fault_qubits[k]));
  EXPECT_NO_THROW(qc.validate());
}

TEST(Qcompile, InverterQasm) {
  const auto fc = designate_assumables(inverter(), {"i"});
  const auto text = to_qasm(build_diagnosis_circuit(fc, {}, {{"o", true}}));
  auto count = [&](const std::string& op) {
    std::size_t n = 0;
    for (std::size_t pos = 0; (pos = text.find("\n" + op + " ", pos)) != std::string::npos; ++pos) ++n;
    return n;
  };
  EXPECT_EQ(text.rfind("OPENQASM 2.0;", 0), 0U);
  EXPECT_NE(text.find("qreg q[2];"), std::string::npos);
  EXPECT_EQ(count("h"), 1U);
  EXPECT_EQ(count("x"), 1U);
  EXPECT_EQ(count("cx"), 1U);
  EXPECT_EQ(count("ccx"), 0U);
  EXPECT_EQ(count("measure"), 2U);
}

TEST(QcompileProperty, OracleFidelity) {
  for (auto f : kAllFamilies) {
    for (int w : {1, 2}) {
      Circuit c = parse_bench("INPUT(a)\nOUTPUT(a)\n");
      try {
        c = generate_benchmark(f, w);
      } catch (const UsageError&) {
        continue;
      }
      const auto plain = oracle::oracle_fidelity(c);
      EXPECT_EQ(plain.mismatches, 0U) << to_string(f) << w;
      const auto fc = augment_stuck_at_1(c);
      if (fc.circuit.inputs().size() <= 12) {
        const auto aug = oracle::oracle_fidelity(fc.circuit);
        EXPECT_EQ(aug.mismatches, 0U) << to_string(f) << w;
      }
    }
  }
}

TEST(QcompileProperty, DenseAgreesOnBasisInputs) {
  const auto c = generate_benchmark(Family::Comparator, 1);
  const auto fc = augment_stuck_at_1(c);
  const auto qc = make_oracle(fc.circuit);
  ASSERT_LE(qc.qubit_count, 20U);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 16; ++t) {
    const auto bits = rng() & ((1ULL << fc.circuit.inputs().size()) - 1);
    auto run = qc;
    for (std::size_t k = 0; k < fc.circuit.inputs().size(); ++k) run.init[k] = (bits >> k) & 1U;
    const auto state = run_statevector(run);
    const auto expect = oracle::sweep_eval(fc.circuit, oracle::unpack(fc.circuit.inputs(), bits));
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < qc.qubit_count; ++q)
      if (expect.at(qc.labels[q])) index |= 1ULL << q;
    EXPECT_NEAR(std::abs(state[index]), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace qdiag
