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

#include "qdiag/qcompile.hpp"

#include <algorithm>

#include "qdiag/error.hpp"

namespace qdiag {

std::string_view to_string(QuantumGateKind kind) {
  switch (kind) {
    case QuantumGateKind::X: return "x";
    case QuantumGateKind::H: return "h";
    case QuantumGateKind::CNOT: return "cx";
    case QuantumGateKind::CCNOT: return "ccx";
  }
  return "?";
}

void QuantumGate::validate(std::size_t qubit_count) const {
  const auto n = control_count(kind);
  if (target >= qubit_count) throw UsageError("gate target " + std::to_string(target) + " out of range");
  for (std::size_t k = 0; k < n; ++k) {
    if (controls[k] >= qubit_count) throw UsageError("gate control " + std::to_string(controls[k]) + " out of range");
    if (controls[k] == target) throw UsageError("gate control coincides with its target");
  }
  if (n == 2 && controls[0] == controls[1]) throw UsageError("CCNOT controls coincide");
}

std::size_t QuantumCircuit::gate_count() const {
  return program.size() + static_cast<std::size_t>(std::count(init.begin(), init.end(), 1));
}

std::size_t QuantumCircuit::count(QuantumGateKind kind) const {
  auto n = static_cast<std::size_t>(
      std::count_if(program.begin(), program.end(), [kind](const QuantumGate& g) { return g.kind == kind; }));
  if (kind == QuantumGateKind::X) n += static_cast<std::size_t>(std::count(init.begin(), init.end(), 1));
  return n;
}

std::vector<std::size_t> QuantumCircuit::measured_qubits() const {
  auto out = fault_qubits;
  if (output_qubit && std::find(out.begin(), out.end(), *output_qubit) == out.end()) out.push_back(*output_qubit);
  return out;
}

void QuantumCircuit::validate() const {
  if (labels.size() != qubit_count || init.size() != qubit_count)
    throw UsageError("labels/init must have one entry per qubit");
  for (const auto& g : program) g.validate(qubit_count);
  for (auto q : fault_qubits)
    if (q >= qubit_count) throw UsageError("fault qubit out of range");
  if (output_qubit && *output_qubit >= qubit_count) throw UsageError("output qubit out of range");
}

QuantumCircuit make_oracle(const Circuit& c, const CompileOptions& options) {
  const auto qubits = c.inputs().size() + c.gates().size();
  if (qubits > options.qubit_cap) {
    throw ResourceLimit("oracle needs " + std::to_string(qubits) + " qubits, cap is " +
                        std::to_string(options.qubit_cap));
  }
  QuantumCircuit qc;
  qc.qubit_count = qubits;
  qc.labels.reserve(qubits);
  qc.init.assign(qubits, 0);
  for (const auto& in : c.inputs()) {
    qc.wire_map.emplace(in, qc.labels.size());
    qc.labels.push_back(in);
  }
  for (auto g : c.topological_order()) {
    const auto& gate = c.gates()[g];
    const auto anc = qc.labels.size();
    const auto a = qc.wire_map.at(gate.inputs[0]);
    switch (gate.kind) {
      case GateKind::Not:
        qc.init[anc] = 1;
        qc.program.push_back(QuantumGate::cnot(a, anc));
        break;
      case GateKind::And2:
        qc.program.push_back(QuantumGate::ccnot(a, qc.wire_map.at(gate.inputs[1]), anc));
        break;
      case GateKind::Xor2: {
        const auto b = qc.wire_map.at(gate.inputs[1]);
        qc.program.push_back(QuantumGate::cnot(a, anc));
        qc.program.push_back(QuantumGate::cnot(b, anc));
        break;
      }
      case GateKind::Or2: {
        // De Morgan: anc = 1 ⊕ (¬a ∧ ¬b); the trailing X pair restores the inputs.
        const auto b = qc.wire_map.at(gate.inputs[1]);
        qc.init[anc] = 1;
        qc.program.push_back(QuantumGate::x(a));
        qc.program.push_back(QuantumGate::x(b));
        qc.program.push_back(QuantumGate::ccnot(a, b, anc));
        qc.program.push_back(QuantumGate::x(a));
        qc.program.push_back(QuantumGate::x(b));
        break;
      }
    }
    qc.wire_map.emplace(gate.output, anc);
    qc.labels.push_back(gate.output);
  }
  return qc;
}

namespace {

class NameSource {
 public:
  explicit NameSource(const Circuit& c) : c_(c) {}

  std::string take(const std::string& base) {
    auto name = base;
    for (int k = 1; c_.has_wire(name) || std::find(taken_.begin(), taken_.end(), name) != taken_.end(); ++k)
      name = base + "_" + std::to_string(k);
    taken_.push_back(name);
    return name;
  }

 private:
  const Circuit& c_;
  std::vector<std::string> taken_;
};

}  // namespace

Circuit combine_outputs(const Circuit& c, const Assignment& beta) {
  for (const auto& y : c.outputs())
    if (!beta.contains(y)) throw AssignmentError("beta does not bind output '" + y + "'");
  if (beta.size() != c.outputs().size()) throw AssignmentError("beta binds wires that are not primary outputs");
  if (c.outputs().empty()) throw UsageError("circuit has no primary outputs to combine");
  if (c.outputs().size() == 1 && beta.at(c.outputs().front())) return c;

  NameSource names(c);
  const auto out = names.take("o");
  const bool single = c.outputs().size() == 1;
  std::vector<Gate> added;
  std::vector<std::string> literals;
  for (const auto& y : c.outputs()) {
    if (beta.at(y)) {
      literals.push_back(y);
      continue;
    }
    auto name = single ? out : names.take(y + "_n");
    added.push_back(Gate{GateKind::Not, {y}, name});
    literals.push_back(std::move(name));
  }
  auto acc = literals.front();
  for (std::size_t k = 1; k < literals.size(); ++k) {
    auto name = k + 1 == literals.size() ? out : names.take(out + "_" + std::to_string(k));
    added.push_back(Gate{GateKind::And2, {acc, literals[k]}, name});
    acc = std::move(name);
  }
  auto gates = c.gates();
  gates.insert(gates.end(), added.begin(), added.end());
  return Circuit(c.inputs(), {out}, std::move(gates));
}

std::size_t diagnosis_qubit_count(const FaultCircuit& fc, const Assignment& beta) {
  const auto& outs = fc.circuit.outputs();
  std::size_t extra = outs.size() > 1 ? outs.size() - 1 : 0;
  for (const auto& y : outs) {
    auto it = beta.find(y);
    if (it == beta.end()) throw AssignmentError("beta does not bind output '" + y + "'");
    if (!it->second) ++extra;
  }
  return fc.circuit.inputs().size() + fc.circuit.gates().size() + extra;
}

QuantumCircuit build_diagnosis_circuit(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                       const CompileOptions& options) {
  const auto observed = fc.observed_inputs();
  for (const auto& in : observed)
    if (!alpha.contains(in)) throw AssignmentError("alpha does not bind input '" + in + "'");
  for (const auto& [name, value] : alpha)
    if (std::find(observed.begin(), observed.end(), name) == observed.end())
      throw AssignmentError("alpha binds '" + name + "', which is not an observed primary input");

  const auto combined = combine_outputs(fc.circuit, beta);
  auto qc = make_oracle(combined, options);
  for (const auto& [name, value] : alpha) qc.init[qc.wire_map.at(name)] = value ? 1 : 0;

  std::vector<QuantumGate> prefix;
  for (const auto& f : fc.fault_inputs) {
    const auto q = qc.wire_map.at(f);
    qc.fault_qubits.push_back(q);
    prefix.push_back(QuantumGate::h(q));
  }
  qc.program.insert(qc.program.begin(), prefix.begin(), prefix.end());
  qc.output_qubit = qc.wire_map.at(combined.outputs().front());
  return qc;
}

}  // namespace qdiag
