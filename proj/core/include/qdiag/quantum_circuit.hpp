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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdiag {

enum class QuantumGateKind : std::uint8_t { X, H, CNOT, CCNOT };

std::string_view to_string(QuantumGateKind kind);

constexpr std::size_t control_count(QuantumGateKind kind) {
  switch (kind) {
    case QuantumGateKind::X:
    case QuantumGateKind::H: return 0;
    case QuantumGateKind::CNOT: return 1;
    case QuantumGateKind::CCNOT: return 2;
  }
  return 0;
}

struct QuantumGate {
  QuantumGateKind kind = QuantumGateKind::X;
  std::array<std::size_t, 2> controls{};  // first control_count(kind) entries are used
  std::size_t target = 0;

  static QuantumGate x(std::size_t t) { return {QuantumGateKind::X, {}, t}; }
  static QuantumGate h(std::size_t t) { return {QuantumGateKind::H, {}, t}; }
  static QuantumGate cnot(std::size_t c, std::size_t t) { return {QuantumGateKind::CNOT, {c, 0}, t}; }
  static QuantumGate ccnot(std::size_t c1, std::size_t c2, std::size_t t) {
    return {QuantumGateKind::CCNOT, {c1, c2}, t};
  }

  /// Throws UsageError if an index is >= qubit_count or indices coincide.
  void validate(std::size_t qubit_count) const;

  friend bool operator==(const QuantumGate& a, const QuantumGate& b) {
    if (a.kind != b.kind || a.target != b.target) return false;
    for (std::size_t k = 0; k < control_count(a.kind); ++k)
      if (a.controls[k] != b.controls[k]) return false;
    return true;
  }
};

/// Gate program over `qubit_count` qubits.
///
/// Qubit k starts in basis state |init[k]⟩ (prepared with an X gate from
/// |0⟩); `program` then runs in order. For compiled circuits qubit 0 is the
/// first declared primary input, then the remaining inputs (fault inputs in
/// F order), then one ancilla per gate in topological order.
struct QuantumCircuit {
  std::size_t qubit_count = 0;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> init;
  std::vector<QuantumGate> program;
  std::map<std::string, std::size_t> wire_map;
  std::vector<std::size_t> fault_qubits;
  std::optional<std::size_t> output_qubit;

  /// X preparations plus program length.
  std::size_t gate_count() const;
  std::size_t count(QuantumGateKind kind) const;
  /// Measured qubits of a diagnosis circuit: fault qubits, then the output qubit.
  std::vector<std::size_t> measured_qubits() const;
  /// Checks every gate and the per-qubit vectors; throws UsageError.
  void validate() const;
};

}  // namespace qdiag
