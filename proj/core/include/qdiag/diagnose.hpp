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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdiag/faultlab.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/qsim.hpp"
#include "qdiag/satdiag.hpp"

namespace qdiag {

/// How the measured distribution of a diagnosis circuit is obtained.
enum class Backend {
  Auto,       ///< Dense up to QuantumOptions::auto_dense_limit qubits, sparse above.
  Dense,      ///< Full 2^q statevector, bounded by qubit_cap.
  Sparse,     ///< Non-zero amplitudes only, bounded by max_superposition.
  Enumerate,  ///< Classical enumeration of the Hadamard qubits.
};

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

struct QuantumOptions {
  Backend backend = Backend::Auto;
  std::size_t qubit_cap = kDefaultQubitCap;
  std::size_t auto_dense_limit = 20;
  /// Largest number of superposed fault qubits for the sparse/enumerate backends.
  std::size_t max_superposition = 20;
  /// Shots to sample; nullopt reads the exact distribution.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  /// Extra attempts, each with a fresh derived seed, when no shot has o = 1.
  int max_retries = 3;
};

/// Conditional fault probabilities read from a diagnosis circuit.
struct QuantumFaultEstimate {
  std::vector<std::string> faults;
  std::map<std::string, double> probability;
  /// Pr(o = 1) (or Pr(o = 0) for marginal_health): exact mass or shot fraction.
  double conditioning_mass = 0.0;
  std::optional<std::uint64_t> shots;  ///< nullopt for exact mode
  std::uint64_t seed = 0;              ///< seed of the successful attempt
  std::string generator;
  int attempts = 1;
};

/// Pr(f = 1 | o = 1) for every fault qubit of `qc`, from outcomes over
/// qc.measured_qubits() (or any superset). Throws InconsistentObservation
/// when no mass has o = 1.
QuantumFaultEstimate fault_probabilities(const Distribution& outcomes, const QuantumCircuit& qc);
QuantumFaultEstimate fault_probabilities(const ShotHistogram& outcomes, const QuantumCircuit& qc);

/// Pr(f = 1 | o = 0), the healthy-branch estimate. Throws
/// InconsistentObservation when no mass has o = 0.
QuantumFaultEstimate marginal_health(const Distribution& outcomes, const QuantumCircuit& qc);
QuantumFaultEstimate marginal_health(const ShotHistogram& outcomes, const QuantumCircuit& qc);

/// Σ_f (ps[f] - pq[f])². Throws UsageError when the key sets differ.
double err_metric(const std::map<std::string, double>& ps, const std::map<std::string, double>& pq);
double err_metric(const FaultDistribution& ps, const QuantumFaultEstimate& pq);

/// Exact distribution over qc.measured_qubits() using the configured backend.
/// Throws ResourceLimit if the selected backend cannot hold the circuit.
Distribution measured_distribution(const QuantumCircuit& qc, const QuantumOptions& options);

/// Checks that the selected backend can simulate `fc` observed with `beta`,
/// returning a human-readable reason when it cannot.
std::optional<std::string> capacity_problem(const FaultCircuit& fc, const Assignment& beta,
                                            const QuantumOptions& options);

/// Builds the diagnosis circuit, simulates it and conditions on o = 1.
/// In shots mode a run without any o = 1 shot is retried with
/// substream_seed(seed, attempt) up to max_retries times, then reported as
/// InconsistentObservation.
QuantumFaultEstimate quantum_diagnose(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                      const QuantumOptions& options = {});

/// Same as quantum_diagnose, starting from an already computed exact distribution.
QuantumFaultEstimate estimate_from_distribution(const Distribution& exact, const QuantumCircuit& qc,
                                                const QuantumOptions& options);

}  // namespace qdiag
