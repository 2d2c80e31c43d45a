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

#include <sstream>

#include "qdiag/qcompile.hpp"

namespace qdiag {

std::string to_qasm(const QuantumCircuit& qc) {
  qc.validate();
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  for (std::size_t q = 0; q < qc.qubit_count; ++q) out << "// q[" << q << "] " << qc.labels[q] << '\n';
  out << "qreg q[" << qc.qubit_count << "];\n";

  auto measured = qc.measured_qubits();
  if (measured.empty())
    for (std::size_t q = 0; q < qc.qubit_count; ++q) measured.push_back(q);
  out << "creg c[" << measured.size() << "];\n";

  for (std::size_t q = 0; q < qc.qubit_count; ++q)
    if (qc.init[q]) out << "x q[" << q << "];\n";
  for (const auto& g : qc.program) {
    out << to_string(g.kind) << ' ';
    for (std::size_t k = 0; k < control_count(g.kind); ++k) out << "q[" << g.controls[k] << "],";
    out << "q[" << g.target << "];\n";
  }
  for (std::size_t k = 0; k < measured.size(); ++k) out << "measure q[" << measured[k] << "] -> c[" << k << "];\n";
  return out.str();
}

}  // namespace qdiag
