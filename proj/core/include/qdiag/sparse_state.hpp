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
#include <span>
#include <utility>
#include <vector>

#include "qdiag/qsim.hpp"

namespace qdiag {

/// Basis state of up to 256 qubits; qubit k is bit k % 64 of word k / 64.
using BasisKey = std::array<std::uint64_t, 4>;

inline bool test_bit(const BasisKey& key, std::size_t q) { return (key[q >> 6] >> (q & 63U)) & 1U; }
inline void flip_bit(BasisKey& key, std::size_t q) { key[q >> 6] ^= std::uint64_t{1} << (q & 63U); }

/// Statevector that stores only non-zero amplitudes as (basis key, amplitude)
/// pairs with distinct keys, in no particular order.
///
/// Memory and time scale with the number of non-zero amplitudes rather than
/// 2^q, which suits programs where a few Hadamards feed a reversible oracle
/// over many ancillas. Gate semantics are identical to the dense simulator.
class SparseState {
 public:
  static constexpr std::size_t kMaxQubits = 256;
  /// Amplitudes with |a| below this are dropped after interference.
  static constexpr double kPruneTolerance = 1e-14;

  explicit SparseState(std::size_t qubits);

  std::size_t qubit_count() const noexcept { return qubits_; }
  const std::vector<std::pair<BasisKey, Amplitude>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double norm_squared() const;

  /// Throws UsageError for an out-of-range gate and ResourceLimit if an H
  /// would grow the state past `max_entries`.
  void apply(const QuantumGate& gate, std::size_t max_entries);

 private:
  std::size_t qubits_;
  std::vector<std::pair<BasisKey, Amplitude>> entries_;
};

struct SparseOptions {
  std::size_t max_entries = std::size_t{1} << 22;
};

SparseState run_sparse(const QuantumCircuit& qc, const SparseOptions& options = {});

Distribution exact_distribution(const SparseState& state, std::span<const std::size_t> qubits);

/// Classical bit propagation of a program that contains no H gates.
/// `bits` holds one 0/1 value per qubit and is updated in place.
void propagate_basis(std::span<const QuantumGate> program, std::vector<std::uint8_t>& bits);

/// Exact measured distribution of `qc` by enumerating its Hadamard qubits.
///
/// Requires every H to act on a qubit that no earlier gate touched, at most
/// once per qubit (the shape of diagnosis circuits). Each of the 2^h settings
/// of those qubits is pushed through the remaining reversible program by
/// propagate_basis and contributes 2^-h; the 2^q vector is never formed.
/// Throws UsageError for other shapes and ResourceLimit if h > max_hadamards.
Distribution enumerate_distribution(const QuantumCircuit& qc, std::span<const std::size_t> qubits,
                                    std::size_t max_hadamards = 24);

}  // namespace qdiag
