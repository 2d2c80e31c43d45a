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

#include <cstddef>
#include <string>

#include "qdiag/faultlab.hpp"
#include "qdiag/netlist.hpp"
#include "qdiag/quantum_circuit.hpp"

namespace qdiag {

/// Dense simulation budget: 2^26 amplitudes of 16 bytes is 1 GiB.
inline constexpr std::size_t kDefaultQubitCap = 26;

struct CompileOptions {
  std::size_t qubit_cap = kDefaultQubitCap;
};

/// Reversible oracle for `c`: one qubit per primary input and one ancilla per
/// gate. Gadgets:
///   NOT  ancilla |1⟩, CNOT(in → anc)
///   AND  ancilla |0⟩, CCNOT(in1, in2 → anc)
///   XOR  ancilla |0⟩, CNOT(in1 → anc), CNOT(in2 → anc)
///   OR   ancilla |1⟩, X(in1), X(in2), CCNOT(in1, in2 → anc), X(in1), X(in2)
/// On every basis input each ancilla ends up holding its gate's value and
/// inputs are left unchanged. Throws ResourceLimit above `qubit_cap`.
QuantumCircuit make_oracle(const Circuit& c, const CompileOptions& options = {});

/// Single-output circuit that is 1 exactly when the outputs of `c` equal
/// `beta`: outputs observed as 0 are inverted, then all are AND-chained
/// (left-leaning). A single output observed as 1 returns `c` unchanged.
Circuit combine_outputs(const Circuit& c, const Assignment& beta);

/// Full diagnosis program: combine_outputs, make_oracle, observed inputs set
/// from `alpha`, and a Hadamard on every fault qubit.
QuantumCircuit build_diagnosis_circuit(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                       const CompileOptions& options = {});

/// Number of qubits build_diagnosis_circuit would allocate, without building it.
std::size_t diagnosis_qubit_count(const FaultCircuit& fc, const Assignment& beta);

/// OpenQASM 2.0 text of `qc`: header, one comment per qubit label, the
/// register, X preparations, program (`x`, `h`, `cx`, `ccx`) and measurement
/// of the measured qubits (all qubits when none are designated).
std::string to_qasm(const QuantumCircuit& qc);

}  // namespace qdiag
