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
#include <optional>
#include <string>
#include <vector>

#include "qdiag/diagnose.hpp"
#include "qdiag/generators.hpp"

namespace qdiag {

struct BenchmarkInstance {
  Family family;
  int width;

  /// `<family>_<width>`, e.g. ripple_adder_2.
  std::string id() const;
};

/// One (circuit, scenario) comparison of the SAT and quantum pipelines.
struct ExperimentRecord {
  std::string circuit;
  std::size_t gates = 0;   ///< gate count before fault augmentation
  std::size_t qubits = 0;  ///< qubits of the diagnosis circuit
  std::uint64_t scenario_seed = 0;
  std::optional<std::uint64_t> shots;  ///< nullopt = exact mode
  std::optional<double> err;
  std::optional<double> pr_o1;
  std::optional<double> t_sat_ms;
  std::optional<double> t_q_ms;
  std::string status = "ok";  ///< "ok", "skipped: <reason>" or "failed: <reason>"
  Scenario scenario;
};

struct SizeExperimentConfig {
  std::vector<BenchmarkInstance> circuits;
  std::size_t scenarios_per_circuit = 10;
  std::size_t max_cardinality = 2;
  std::uint64_t seed = 0;
  QuantumOptions quantum;  ///< quantum.shots selects shots vs exact mode
  bool timing = true;
};

/// For every circuit: augment, draw scenarios, run circuit_health_sat and
/// quantum_diagnose, record Err. Circuits beyond the backend limits produce
/// one "skipped" record each. Scenario seeds derive from
/// substream_seed(seed, circuit index); sampling seeds from the scenario seed.
std::vector<ExperimentRecord> run_error_vs_size(const SizeExperimentConfig& config);

struct ShotsPoint {
  std::optional<std::uint64_t> shots;  ///< nullopt = exact
  double median_err = 0.0;             ///< NaN if every run failed
  std::vector<double> errs;
  std::size_t failures = 0;
};

struct ShotsExperimentConfig {
  std::vector<std::uint64_t> schedule;  ///< strictly increasing
  std::size_t repeats = 11;
  std::uint64_t seed = 0;
  bool include_exact = false;
  QuantumOptions quantum;
};

/// Median Err over `repeats` seeds for each shot count. Repeat r at
/// schedule position i samples with substream_seed(substream_seed(seed, i), r).
std::vector<ShotsPoint> run_error_vs_shots(const FaultCircuit& fc, const Scenario& scenario,
                                           const ShotsExperimentConfig& config);

/// Powers of two 2^lo .. 2^hi.
std::vector<std::uint64_t> doubling_schedule(int lo, int hi);

double median(std::vector<double> values);

/// CSV with header `circuit,gates,qubits,scenario_seed,N,err,pr_o1,t_sat_ms,t_q_ms,status`.
std::string to_csv(const std::vector<ExperimentRecord>& records);
/// CSV with header `N,median_err,runs,failures`.
std::string to_csv(const std::vector<ShotsPoint>& series);

}  // namespace qdiag
