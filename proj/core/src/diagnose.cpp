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

#include "qdiag/diagnose.hpp"

#include <algorithm>

#include "qdiag/error.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/sparse_state.hpp"

namespace qdiag {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Dense: return "dense";
    case Backend::Sparse: return "sparse";
    case Backend::Enumerate: return "enumerate";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (auto b : {Backend::Auto, Backend::Dense, Backend::Sparse, Backend::Enumerate})
    if (to_string(b) == name) return b;
  return std::nullopt;
}

namespace {

struct Positions {
  std::vector<std::size_t> faults;
  std::size_t output;
};

Positions locate(std::span<const std::size_t> measured, const QuantumCircuit& qc) {
  if (!qc.output_qubit) throw UsageError("circuit has no designated output qubit");
  auto pos = [&](std::size_t q) {
    auto it = std::find(measured.begin(), measured.end(), q);
    if (it == measured.end()) throw UsageError("qubit " + std::to_string(q) + " was not measured");
    return static_cast<std::size_t>(it - measured.begin());
  };
  Positions p{{}, pos(*qc.output_qubit)};
  for (auto q : qc.fault_qubits) p.faults.push_back(pos(q));
  return p;
}

// Conditions on the output bit equal to `given` using arbitrary (unnormalized) masses.
template <typename Mass>
QuantumFaultEstimate condition(const std::map<std::string, Mass>& masses, std::span<const std::size_t> measured,
                               const QuantumCircuit& qc, char given) {
  const auto p = locate(measured, qc);
  double total = 0.0, cond = 0.0;
  std::vector<double> on(p.faults.size(), 0.0);
  for (const auto& [label, m] : masses) {
    const auto mass = static_cast<double>(m);
    total += mass;
    if (label[p.output] != given) continue;
    cond += mass;
    for (std::size_t k = 0; k < p.faults.size(); ++k)
      if (label[p.faults[k]] == '1') on[k] += mass;
  }
  if (cond <= 0.0) {
    throw InconsistentObservation(std::string("no diagnosis observed: Pr(o=") + given + ") = 0");
  }
  QuantumFaultEstimate e;
  e.conditioning_mass = cond / total;
  for (std::size_t k = 0; k < p.faults.size(); ++k) {
    const auto& name = qc.labels[qc.fault_qubits[k]];
    e.faults.push_back(name);
    e.probability.emplace(name, on[k] / cond);
  }
  return e;
}

}  // namespace

QuantumFaultEstimate fault_probabilities(const Distribution& outcomes, const QuantumCircuit& qc) {
  return condition(outcomes.probability, outcomes.qubits, qc, '1');
}

QuantumFaultEstimate fault_probabilities(const ShotHistogram& outcomes, const QuantumCircuit& qc) {
  auto e = condition(outcomes.counts, outcomes.qubits, qc, '1');
  e.shots = outcomes.shots;
  e.seed = outcomes.seed;
  e.generator = outcomes.generator;
  return e;
}

QuantumFaultEstimate marginal_health(const Distribution& outcomes, const QuantumCircuit& qc) {
  return condition(outcomes.probability, outcomes.qubits, qc, '0');
}

QuantumFaultEstimate marginal_health(const ShotHistogram& outcomes, const QuantumCircuit& qc) {
  auto e = condition(outcomes.counts, outcomes.qubits, qc, '0');
  e.shots = outcomes.shots;
  e.seed = outcomes.seed;
  e.generator = outcomes.generator;
  return e;
}

double err_metric(const std::map<std::string, double>& ps, const std::map<std::string, double>& pq) {
  if (ps.size() != pq.size()) throw UsageError("fault sets differ in size");
  double err = 0.0;
  for (const auto& [name, p] : ps) {
    auto it = pq.find(name);
    if (it == pq.end()) throw UsageError("fault '" + name + "' missing from the quantum estimate");
    const double diff = p - it->second;
    err += diff * diff;
  }
  return err;
}

double err_metric(const FaultDistribution& ps, const QuantumFaultEstimate& pq) {
  return err_metric(ps.probabilities(), pq.probability);
}

namespace {

Backend resolve(Backend b, std::size_t qubits, const QuantumOptions& options) {
  if (b != Backend::Auto) return b;
  return qubits <= std::min(options.auto_dense_limit, options.qubit_cap) ? Backend::Dense : Backend::Sparse;
}

}  // namespace

std::optional<std::string> capacity_problem(const FaultCircuit& fc, const Assignment& beta,
                                            const QuantumOptions& options) {
  const auto qubits = diagnosis_qubit_count(fc, beta);
  const auto h = fc.fault_inputs.size();
  switch (resolve(options.backend, qubits, options)) {
    case Backend::Dense:
      if (qubits > options.qubit_cap)
        return "needs " + std::to_string(qubits) + " qubits, dense cap is " + std::to_string(options.qubit_cap);
      break;
    case Backend::Sparse:
      if (qubits > SparseState::kMaxQubits) return "needs " + std::to_string(qubits) + " qubits, sparse limit is 256";
      [[fallthrough]];
    case Backend::Enumerate:
      if (h > options.max_superposition)
        return std::to_string(h) + " superposed fault qubits exceed the limit of " +
               std::to_string(options.max_superposition);
      break;
    case Backend::Auto: break;
  }
  return std::nullopt;
}

Distribution measured_distribution(const QuantumCircuit& qc, const QuantumOptions& options) {
  const auto measured = qc.measured_qubits();
  switch (resolve(options.backend, qc.qubit_count, options)) {
    case Backend::Dense: {
      SimOptions sim;
      sim.qubit_cap = options.qubit_cap;
      return exact_distribution(run_statevector(qc, sim), measured);
    }
    case Backend::Sparse: {
      const auto h = qc.count(QuantumGateKind::H);
      if (h > options.max_superposition)
        throw ResourceLimit(std::to_string(h) + " superposed qubits exceed the limit of " +
                            std::to_string(options.max_superposition));
      SparseOptions sparse;
      sparse.max_entries = std::size_t{1} << options.max_superposition;
      return exact_distribution(run_sparse(qc, sparse), measured);
    }
    case Backend::Enumerate: return enumerate_distribution(qc, measured, options.max_superposition);
    case Backend::Auto: break;
  }
  throw std::logic_error("unresolved backend");
}

QuantumFaultEstimate estimate_from_distribution(const Distribution& exact, const QuantumCircuit& qc,
                                                const QuantumOptions& options) {
  if (!options.shots) return fault_probabilities(exact, qc);
  // Zero exact mass means no amount of resampling will help.
  fault_probabilities(exact, qc);
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    const auto seed = attempt == 0 ? options.seed : substream_seed(options.seed, static_cast<std::uint64_t>(attempt));
    auto hist = sample(exact, *options.shots, seed);
    try {
      auto e = fault_probabilities(hist, qc);
      e.attempts = attempt + 1;
      return e;
    } catch (const InconsistentObservation&) {
    }
  }
  throw InconsistentObservation("no shot had the combined output set after " +
                                std::to_string(options.max_retries + 1) + " attempts");
}

QuantumFaultEstimate quantum_diagnose(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                      const QuantumOptions& options) {
  if (auto problem = capacity_problem(fc, beta, options)) throw ResourceLimit(*problem);
  CompileOptions compile;
  compile.qubit_cap = SparseState::kMaxQubits;
  const auto qc = build_diagnosis_circuit(fc, alpha, beta, compile);
  return estimate_from_distribution(measured_distribution(qc, options), qc, options);
}

}  // namespace qdiag
