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

#include "qdiag/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdiag/error.hpp"

namespace qdiag {

SparseState::SparseState(std::size_t qubits) : qubits_(qubits) {
  if (qubits > kMaxQubits) throw ResourceLimit("sparse state supports at most 256 qubits");
  entries_.emplace_back(BasisKey{}, Amplitude{1.0, 0.0});
}

double SparseState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [key, a] : entries_) sum += std::norm(a);
  return sum;
}

void SparseState::apply(const QuantumGate& gate, std::size_t max_entries) {
  gate.validate(qubits_);
  const auto t = gate.target;
  if (gate.kind != QuantumGateKind::H) {
    // Permutation gate: rewrite keys; the set stays duplicate-free.
    for (auto& [key, a] : entries_) {
      bool fire = true;
      for (std::size_t k = 0; k < control_count(gate.kind); ++k) fire = fire && test_bit(key, gate.controls[k]);
      if (fire) flip_bit(key, t);
    }
    return;
  }
  if (2 * entries_.size() > max_entries) {
    throw ResourceLimit("sparse state would exceed " + std::to_string(max_entries) + " amplitudes");
  }
  constexpr double s = std::numbers::sqrt2 / 2.0;
  std::vector<std::pair<BasisKey, Amplitude>> next;
  next.reserve(2 * entries_.size());
  for (const auto& [key, a] : entries_) {
    BasisKey zero = key, one = key;
    const bool bit = test_bit(key, t);
    if (bit) flip_bit(zero, t);
    else flip_bit(one, t);
    next.emplace_back(zero, s * a);
    next.emplace_back(one, bit ? -s * a : s * a);
  }
  std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  entries_.clear();
  for (std::size_t i = 0; i < next.size();) {
    auto key = next[i].first;
    Amplitude sum{0.0, 0.0};
    for (; i < next.size() && next[i].first == key; ++i) sum += next[i].second;
    if (std::abs(sum) >= kPruneTolerance) entries_.emplace_back(key, sum);
  }
}

SparseState run_sparse(const QuantumCircuit& qc, const SparseOptions& options) {
  qc.validate();
  SparseState state(qc.qubit_count);
  for (std::size_t q = 0; q < qc.qubit_count; ++q)
    if (qc.init[q]) state.apply(QuantumGate::x(q), options.max_entries);
  for (const auto& g : qc.program) state.apply(g, options.max_entries);
  return state;
}

Distribution exact_distribution(const SparseState& state, std::span<const std::size_t> qubits) {
  if (qubits.empty()) throw UsageError("qubit subset must not be empty");
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] >= state.qubit_count()) throw UsageError("qubit " + std::to_string(qubits[k]) + " out of range");
    for (std::size_t j = 0; j < k; ++j)
      if (qubits[j] == qubits[k]) throw UsageError("qubit subset contains duplicates");
  }
  Distribution d{{qubits.begin(), qubits.end()}, {}};
  std::string label(qubits.size(), '0');
  for (const auto& [key, a] : state.entries()) {
    for (std::size_t j = 0; j < qubits.size(); ++j) label[j] = test_bit(key, qubits[j]) ? '1' : '0';
    d.probability[label] += std::norm(a);
  }
  return d;
}

void propagate_basis(std::span<const QuantumGate> program, std::vector<std::uint8_t>& bits) {
  for (const auto& g : program) {
    g.validate(bits.size());
    switch (g.kind) {
      case QuantumGateKind::X: bits[g.target] ^= 1U; break;
      case QuantumGateKind::CNOT: bits[g.target] ^= bits[g.controls[0]]; break;
      case QuantumGateKind::CCNOT: bits[g.target] ^= bits[g.controls[0]] & bits[g.controls[1]]; break;
      case QuantumGateKind::H: throw UsageError("bit propagation cannot apply a Hadamard gate");
    }
  }
}

Distribution enumerate_distribution(const QuantumCircuit& qc, std::span<const std::size_t> qubits,
                                    std::size_t max_hadamards) {
  qc.validate();
  if (qubits.empty()) throw UsageError("qubit subset must not be empty");
  for (auto q : qubits)
    if (q >= qc.qubit_count) throw UsageError("qubit " + std::to_string(q) + " out of range");

  std::vector<std::size_t> superposed;
  std::vector<QuantumGate> rest;
  std::vector<std::uint8_t> touched(qc.qubit_count, 0);
  for (const auto& g : qc.program) {
    if (g.kind == QuantumGateKind::H) {
      if (touched[g.target]) throw UsageError("Hadamard after other gates on qubit " + std::to_string(g.target));
      superposed.push_back(g.target);
      touched[g.target] = 1;
      continue;
    }
    touched[g.target] = 1;
    for (std::size_t k = 0; k < control_count(g.kind); ++k) touched[g.controls[k]] = 1;
    rest.push_back(g);
  }
  if (superposed.size() > max_hadamards || superposed.size() >= 63) {
    throw ResourceLimit("enumeration over " + std::to_string(superposed.size()) + " superposed qubits exceeds " +
                        std::to_string(max_hadamards));
  }

  // H|b⟩ has equal-magnitude components, and the remaining program only
  // permutes basis states, so every setting carries weight 2^-h.
  std::map<std::string, std::uint64_t> counts;
  const std::uint64_t settings = std::uint64_t{1} << superposed.size();
  std::vector<std::uint8_t> bits;
  std::string label(qubits.size(), '0');
  for (std::uint64_t s = 0; s < settings; ++s) {
    bits = qc.init;
    for (std::size_t j = 0; j < superposed.size(); ++j) bits[superposed[j]] = (s >> j) & 1U;
    propagate_basis(rest, bits);
    for (std::size_t j = 0; j < qubits.size(); ++j) label[j] = bits[qubits[j]] ? '1' : '0';
    ++counts[label];
  }
  Distribution d{{qubits.begin(), qubits.end()}, {}};
  for (const auto& [l, n] : counts) d.probability.emplace(l, std::ldexp(static_cast<double>(n), -static_cast<int>(superposed.size())));
  return d;
}

}  // namespace qdiag
