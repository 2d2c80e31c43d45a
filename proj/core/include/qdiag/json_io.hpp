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

#include <nlohmann/json.hpp>

#include "qdiag/diagnose.hpp"
#include "qdiag/experiments.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/qsim.hpp"
#include "qdiag/satdiag.hpp"

namespace qdiag {

using Json = nlohmann::json;

/// {"a": 0, "b": 1, ...}
Json to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j);

/// {"alpha": {...}, "gamma": {...}, "beta": {...}, "seed": n}
Json to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

/// {"diagnoses": d, "consistent": bool,
///  "faults": [{"name", "numerator", "denominator", "probability"}...]}
/// Probabilities are omitted when d = 0.
Json to_json(const FaultDistribution& d);

/// {"faults": [{"name", "probability"}...], "pr_o1", "shots" (number or "exact"),
///  "seed", "generator", "attempts"}
Json to_json(const QuantumFaultEstimate& e);

/// Debug dump {"qubits": q, "amplitudes": [{"index", "real", "imag"}...]}; q ≤ 10.
Json to_json(const StateVector& s);

Json to_json(const Distribution& d);
Json to_json(const ShotHistogram& h);
Json to_json(const ExperimentRecord& r);
Json to_json(const ShotsPoint& p);

}  // namespace qdiag
