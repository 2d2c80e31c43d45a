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

#include "qdiag/faultlab.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "qdiag/error.hpp"
#include "qdiag/rng.hpp"

namespace qdiag {

std::vector<std::string> FaultCircuit::observed_inputs() const {
  std::vector<std::string> out;
  for (const auto& in : circuit.inputs())
    if (std::find(fault_inputs.begin(), fault_inputs.end(), in) == fault_inputs.end()) out.push_back(in);
  return out;
}

namespace {

std::string fresh_name(const Circuit& c, const std::vector<std::string>& taken, std::string base) {
  auto used = [&](const std::string& n) {
    return c.has_wire(n) || std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(base)) return base;
  for (int k = 1;; ++k) {
    auto candidate = base + "_" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace

FaultCircuit augment_stuck_at_1(const Circuit& c) {
  std::vector<std::string> taken;
  std::unordered_map<std::string, std::string> renamed;
  std::vector<std::string> faults;
  std::map<std::string, std::string> origin;
  std::vector<Gate> gates;

  for (auto g : c.topological_order()) {
    const auto& out = c.gates()[g].output;
    auto pre = fresh_name(c, taken, out + "_pre");
    taken.push_back(pre);
    auto fault = fresh_name(c, taken, out + std::string(kFaultSuffix));
    taken.push_back(fault);
    renamed.emplace(out, pre);
    faults.push_back(fault);
    origin.emplace(fault, out);
  }
  const auto& order = c.topological_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    Gate gate = c.gates()[order[i]];
    auto out = gate.output;
    gate.output = renamed.at(out);
    gates.push_back(Gate{GateKind::Or2, {gate.output, faults[i]}, std::move(out)});
    gates.insert(gates.end() - 1, std::move(gate));
  }

  auto inputs = c.inputs();
  inputs.insert(inputs.end(), faults.begin(), faults.end());
  return FaultCircuit{Circuit(std::move(inputs), c.outputs(), std::move(gates)), std::move(faults),
                      std::move(origin)};
}

FaultCircuit designate_assumables(const Circuit& c, std::vector<std::string> names) {
  for (const auto& n : names)
    if (!c.is_input(n)) throw AssignmentError("'" + n + "' is not a primary input");
  return FaultCircuit{c, std::move(names), {}};
}

Assignment inject_and_observe(const FaultCircuit& fc, const Assignment& alpha, const Assignment& gamma) {
  Assignment all;
  for (const auto& in : fc.observed_inputs()) {
    auto it = alpha.find(in);
    if (it == alpha.end()) throw AssignmentError("alpha does not bind input '" + in + "'");
    all.emplace(in, it->second);
  }
  for (const auto& f : fc.fault_inputs) {
    auto it = gamma.find(f);
    if (it == gamma.end()) throw AssignmentError("gamma does not bind fault input '" + f + "'");
    all.emplace(f, it->second);
  }
  if (all.size() != alpha.size() + gamma.size())
    throw AssignmentError("alpha/gamma bind wires that are not inputs of the fault circuit");
  return restrict_to(evaluate(fc.circuit, all), fc.circuit.outputs());
}

std::vector<Scenario> random_scenarios(const FaultCircuit& fc, std::size_t count, std::size_t max_cardinality,
                                       std::uint64_t seed) {
  if (count == 0) throw UsageError("scenario count must be at least 1");
  const auto nf = fc.fault_inputs.size();
  if (max_cardinality < 1 || max_cardinality > nf)
    throw UsageError("max_cardinality must lie in [1, " + std::to_string(nf) + "]");

  const auto observed = fc.observed_inputs();
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Scenario s;
    s.seed = substream_seed(seed, i);
    Rng rng(s.seed);
    for (const auto& in : observed) s.alpha.emplace(in, (rng() >> 63) != 0);
    auto k = 1 + uniform_below(rng, max_cardinality);
    // Partial Fisher-Yates picks a uniform k-subset.
    std::vector<std::size_t> idx(nf);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t j = 0; j < k; ++j) std::swap(idx[j], idx[j + uniform_below(rng, nf - j)]);
    for (const auto& f : fc.fault_inputs) s.gamma.emplace(f, false);
    for (std::size_t j = 0; j < k; ++j) s.gamma[fc.fault_inputs[idx[j]]] = true;
    s.beta = inject_and_observe(fc, s.alpha, s.gamma);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qdiag
