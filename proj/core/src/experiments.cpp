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

#include "qdiag/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "qdiag/error.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/sparse_state.hpp"

namespace qdiag {

std::string BenchmarkInstance::id() const { return std::string(to_string(family)) + "_" + std::to_string(width); }

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) return format_double(*v);
  else return std::to_string(*v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ExperimentRecord> run_error_vs_size(const SizeExperimentConfig& config) {
  std::vector<ExperimentRecord> records;
  for (std::size_t ci = 0; ci < config.circuits.size(); ++ci) {
    const auto& inst = config.circuits[ci];
    std::optional<Circuit> generated;
    try {
      generated = generate_benchmark(inst.family, inst.width);
    } catch (const UsageError& e) {
      ExperimentRecord r;
      r.circuit = inst.id();
      r.shots = config.quantum.shots;
      r.scenario_seed = substream_seed(config.seed, ci);
      r.status = std::string("skipped: ") + e.what();
      records.push_back(std::move(r));
      continue;
    }
    const auto& circuit = *generated;
    const auto fc = augment_stuck_at_1(circuit);
    const auto max_card = std::min(config.max_cardinality, fc.fault_inputs.size());
    const auto circuit_seed = substream_seed(config.seed, ci);

    ExperimentRecord base;
    base.circuit = inst.id();
    base.gates = circuit.gates().size();
    base.shots = config.quantum.shots;

    // Capacity depends on beta only through the combiner, so test the worst case.
    Assignment all_zero;
    for (const auto& y : fc.circuit.outputs()) all_zero.emplace(y, false);
    if (auto problem = capacity_problem(fc, all_zero, config.quantum)) {
      base.qubits = diagnosis_qubit_count(fc, all_zero);
      base.scenario_seed = circuit_seed;
      base.status = "skipped: " + *problem;
      records.push_back(std::move(base));
      continue;
    }

    for (auto& scenario : random_scenarios(fc, config.scenarios_per_circuit, max_card, circuit_seed)) {
      ExperimentRecord r = base;
      r.scenario_seed = scenario.seed;
      r.qubits = diagnosis_qubit_count(fc, scenario.beta);
      try {
        auto t0 = Clock::now();
        const auto exact = circuit_health_sat(fc, scenario.alpha, scenario.beta);
        const double t_sat = ms_since(t0);

        auto opts = config.quantum;
        opts.seed = substream_seed(scenario.seed, 1);
        t0 = Clock::now();
        const auto est = quantum_diagnose(fc, scenario.alpha, scenario.beta, opts);
        const double t_q = ms_since(t0);

        r.err = err_metric(exact, est);
        r.pr_o1 = est.conditioning_mass;
        if (config.timing) {
          r.t_sat_ms = t_sat;
          r.t_q_ms = t_q;
        }
      } catch (const Error& e) {
        r.status = std::string("failed: ") + e.what();
      }
      r.scenario = std::move(scenario);
      records.push_back(std::move(r));
    }
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<std::uint64_t> doubling_schedule(int lo, int hi) {
  if (lo < 0 || hi < lo || hi > 40) throw UsageError("invalid doubling schedule");
  std::vector<std::uint64_t> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::uint64_t{1} << k);
  return out;
}

std::vector<ShotsPoint> run_error_vs_shots(const FaultCircuit& fc, const Scenario& scenario,
                                           const ShotsExperimentConfig& config) {
  if (config.repeats == 0) throw UsageError("repeats must be at least 1");
  for (std::size_t i = 1; i < config.schedule.size(); ++i)
    if (config.schedule[i] <= config.schedule[i - 1]) throw UsageError("shot schedule must be increasing");
  if (config.schedule.empty() && !config.include_exact) throw UsageError("empty shot schedule");
  if (auto problem = capacity_problem(fc, scenario.beta, config.quantum)) throw ResourceLimit(*problem);

  const auto exact = circuit_health_sat(fc, scenario.alpha, scenario.beta);
  if (!exact.consistent()) throw InconsistentObservation("scenario has no diagnosis");
  CompileOptions compile;
  compile.qubit_cap = SparseState::kMaxQubits;
  const auto qc = build_diagnosis_circuit(fc, scenario.alpha, scenario.beta, compile);
  const auto dist = measured_distribution(qc, config.quantum);

  std::vector<ShotsPoint> series;
  for (std::size_t i = 0; i < config.schedule.size(); ++i) {
    ShotsPoint point;
    point.shots = config.schedule[i];
    const auto point_seed = substream_seed(config.seed, i);
    for (std::size_t r = 0; r < config.repeats; ++r) {
      auto opts = config.quantum;
      opts.shots = config.schedule[i];
      opts.seed = substream_seed(point_seed, r);
      try {
        point.errs.push_back(err_metric(exact, estimate_from_distribution(dist, qc, opts)));
      } catch (const InconsistentObservation&) {
        ++point.failures;
      }
    }
    point.median_err = median(point.errs);
    series.push_back(std::move(point));
  }
  if (config.include_exact) {
    auto opts = config.quantum;
    opts.shots.reset();
    ShotsPoint point;
    point.errs.push_back(err_metric(exact, estimate_from_distribution(dist, qc, opts)));
    point.median_err = point.errs.front();
    series.push_back(std::move(point));
  }
  return series;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "circuit,gates,qubits,scenario_seed,N,err,pr_o1,t_sat_ms,t_q_ms,status\n";
  for (const auto& r : records) {
    out << r.circuit << ',' << r.gates << ',' << r.qubits << ',' << r.scenario_seed << ','
        << (r.shots ? std::to_string(*r.shots) : std::string("exact")) << ',' << cell(r.err) << ','
        << cell(r.pr_o1) << ',' << cell(r.t_sat_ms) << ',' << cell(r.t_q_ms) << ',' << csv_escape(r.status)
        << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<ShotsPoint>& series) {
  std::ostringstream out;
  out << "N,median_err,runs,failures\n";
  for (const auto& p : series) {
    out << (p.shots ? std::to_string(*p.shots) : std::string("exact")) << ','
        << (std::isnan(p.median_err) ? std::string() : format_double(p.median_err)) << ',' << p.errs.size() << ','
        << p.failures << '\n';
  }
  return out.str();
}

}  // namespace qdiag
