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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qdiag/qcompile.hpp"
#include "qdiag/quantum_circuit.hpp"

namespace qdiag {

using Amplitude = std::complex<double>;

/// Tolerances shared by the simulator and its checks.
inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kAmplitudeTolerance = 1e-9;

/// Dense state of q qubits. Amplitude index i is the basis state whose qubit
/// k has the value of bit k of i.
class StateVector {
 public:
  /// |0...0⟩ on `qubits` qubits (at most 40).
  explicit StateVector(std::size_t qubits);
  /// Takes ownership of `amplitudes`, whose size must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t qubit_count() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  StateVector() = default;
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// Applies one gate in place with strided index-pair sweeps.
/// Throws UsageError when an index is out of range.
void apply_gate(StateVector& state, const QuantumGate& gate);

struct SimOptions {
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Verify Σ|a|² = 1 within kStateTolerance after every gate.
  bool check_normalization = false;
};

/// Starts from |0...0⟩, applies X on every qubit with init 1, then the program.
/// Throws ResourceLimit above the qubit cap.
StateVector run_statevector(const QuantumCircuit& qc, const SimOptions& options = {});

/// Bitstring over a qubit subset; character j is the value of `qubits[j]`.
std::string basis_label(std::uint64_t index, std::span<const std::size_t> qubits);

/// Marginal probabilities over a qubit subset (outcomes with zero mass omitted).
struct Distribution {
  std::vector<std::size_t> qubits;
  std::map<std::string, double> probability;
};

/// Marginal distribution over `qubits` (non-empty, distinct, in range).
Distribution exact_distribution(const StateVector& state, std::span<const std::size_t> qubits);

struct ShotHistogram {
  std::vector<std::size_t> qubits;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string generator;
};

/// Shots are split into shards of kShotsPerShard; shard s draws from an Rng
/// seeded with substream_seed(seed, s). Each draw is an inverse-CDF lookup
/// over the outcomes in lexicographic order.
inline constexpr std::uint64_t kShotsPerShard = std::uint64_t{1} << 16;

ShotHistogram sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);
ShotHistogram sample(const StateVector& state, std::span<const std::size_t> qubits, std::uint64_t shots,
                     std::uint64_t seed);

}  // namespace qdiag
