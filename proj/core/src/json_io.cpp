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

#include "qdiag/json_io.hpp"

#include <cmath>

#include "qdiag/error.hpp"

namespace qdiag {

Json to_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [name, value] : a) j[name] = value ? 1 : 0;
  return j;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw AssignmentError("assignment must be a JSON object");
  Assignment a;
  for (const auto& [name, value] : j.items()) {
    if (value.is_boolean()) a.emplace(name, value.get<bool>());
    else if (value.is_number_integer() && (value == 0 || value == 1)) a.emplace(name, value == 1);
    else throw AssignmentError("value of '" + name + "' must be 0 or 1");
  }
  return a;
}

Json to_json(const Scenario& s) {
  return Json{{"alpha", to_json(s.alpha)}, {"gamma", to_json(s.gamma)}, {"beta", to_json(s.beta)}, {"seed", s.seed}};
}

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  s.alpha = assignment_from_json(j.at("alpha"));
  s.gamma = assignment_from_json(j.at("gamma"));
  s.beta = assignment_from_json(j.at("beta"));
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

Json to_json(const FaultDistribution& d) {
  Json faults = Json::array();
  for (std::size_t k = 0; k < d.faults().size(); ++k) {
    Json f{{"name", d.faults()[k]}, {"numerator", d.counts()[k]}, {"denominator", d.diagnoses()}};
    if (d.consistent()) f["probability"] = d.probability(d.faults()[k]).value();
    faults.push_back(std::move(f));
  }
  return Json{{"diagnoses", d.diagnoses()}, {"consistent", d.consistent()}, {"faults", std::move(faults)}};
}

Json to_json(const QuantumFaultEstimate& e) {
  Json faults = Json::array();
  for (const auto& name : e.faults) faults.push_back(Json{{"name", name}, {"probability", e.probability.at(name)}});
  Json j{{"faults", std::move(faults)}, {"pr_o1", e.conditioning_mass}, {"attempts", e.attempts}};
  if (e.shots) {
    j["shots"] = *e.shots;
    j["seed"] = e.seed;
    j["generator"] = e.generator;
  } else {
    j["shots"] = "exact";
  }
  return j;
}

Json to_json(const StateVector& s) {
  if (s.qubit_count() > 10) throw UsageError("state dumps are limited to 10 qubits");
  Json amps = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    amps.push_back(Json{{"index", i}, {"real", s[i].real()}, {"imag", s[i].imag()}});
  return Json{{"qubits", s.qubit_count()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const Distribution& d) {
  return Json{{"qubits", d.qubits}, {"probability", d.probability}};
}

Json to_json(const ShotHistogram& h) {
  return Json{{"qubits", h.qubits}, {"counts", h.counts}, {"shots", h.shots}, {"seed", h.seed},
              {"generator", h.generator}};
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const ExperimentRecord& r) {
  return Json{{"circuit", r.circuit},
              {"gates", r.gates},
              {"qubits", r.qubits},
              {"scenario_seed", r.scenario_seed},
              {"N", r.shots ? Json(*r.shots) : Json("exact")},
              {"err", optional_json(r.err)},
              {"pr_o1", optional_json(r.pr_o1)},
              {"t_sat_ms", optional_json(r.t_sat_ms)},
              {"t_q_ms", optional_json(r.t_q_ms)},
              {"status", r.status},
              {"scenario", to_json(r.scenario)}};
}

Json to_json(const ShotsPoint& p) {
  return Json{{"N", p.shots ? Json(*p.shots) : Json("exact")},
              {"median_err", std::isnan(p.median_err) ? Json(nullptr) : Json(p.median_err)},
              {"errs", p.errs},
              {"failures", p.failures}};
}

}  // namespace qdiag
