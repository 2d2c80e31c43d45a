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

#include "qdiag/satdiag.hpp"

#include <algorithm>

#include "qdiag/cdcl.hpp"
#include "qdiag/error.hpp"

namespace qdiag {

namespace {

void check_observation(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta) {
  const auto observed = fc.observed_inputs();
  for (const auto& [name, value] : alpha)
    if (std::find(observed.begin(), observed.end(), name) == observed.end())
      throw AssignmentError("alpha binds '" + name + "', which is not an observed primary input");
  for (const auto& in : observed)
    if (!alpha.contains(in)) throw AssignmentError("alpha does not bind input '" + in + "'");
  const auto& outputs = fc.circuit.outputs();
  for (const auto& [name, value] : beta)
    if (std::find(outputs.begin(), outputs.end(), name) == outputs.end())
      throw AssignmentError("beta binds '" + name + "', which is not a primary output");
  for (const auto& out : outputs)
    if (!beta.contains(out)) throw AssignmentError("beta does not bind output '" + out + "'");
}

}  // namespace

CnfFormula to_cnf(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta) {
  check_observation(fc, alpha, beta);
  CnfFormula f;
  for (const auto& w : fc.circuit.wires()) f.add_variable(w);
  for (const auto& g : fc.circuit.gates()) {
    const int o = f.variable(g.output);
    const int a = f.variable(g.inputs[0]);
    switch (g.kind) {
      case GateKind::Not:
        f.add_clause({a, o});
        f.add_clause({-a, -o});
        break;
      case GateKind::And2: {
        const int b = f.variable(g.inputs[1]);
        f.add_clause({-a, -b, o});
        f.add_clause({a, -o});
        f.add_clause({b, -o});
        break;
      }
      case GateKind::Or2: {
        const int b = f.variable(g.inputs[1]);
        f.add_clause({a, b, -o});
        f.add_clause({-a, o});
        f.add_clause({-b, o});
        break;
      }
      case GateKind::Xor2: {
        const int b = f.variable(g.inputs[1]);
        f.add_clause({-a, -b, -o});
        f.add_clause({a, b, -o});
        f.add_clause({a, -b, o});
        f.add_clause({-a, b, o});
        break;
      }
    }
  }
  for (const auto* obs : {&alpha, &beta})
    for (const auto& [name, value] : *obs) {
      const int v = f.variable(name);
      f.add_clause({value ? v : -v});
    }
  return f;
}

FaultDistribution::FaultDistribution(std::vector<std::string> faults, std::vector<std::uint64_t> counts,
                                     std::uint64_t diagnoses)
    : faults_(std::move(faults)), counts_(std::move(counts)), diagnoses_(diagnoses) {
  if (faults_.size() != counts_.size()) throw std::invalid_argument("one counter per fault required");
  for (auto n : counts_)
    if (n > diagnoses_) throw std::invalid_argument("fault counter exceeds diagnosis count");
}

Rational FaultDistribution::probability(std::string_view fault) const {
  if (!consistent()) throw InconsistentObservation("no diagnosis is consistent with the observation");
  auto it = std::find(faults_.begin(), faults_.end(), fault);
  if (it == faults_.end()) throw AssignmentError("unknown fault '" + std::string(fault) + "'");
  return Rational{counts_[static_cast<std::size_t>(it - faults_.begin())], diagnoses_};
}

std::map<std::string, double> FaultDistribution::probabilities() const {
  std::map<std::string, double> out;
  for (const auto& f : faults_) out.emplace(f, probability(f).value());
  return out;
}

FaultDistribution circuit_health_sat(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                     const SatDiagOptions& options, const DiagnosisVisitor& visit) {
  const auto cnf = to_cnf(fc, alpha, beta);
  CdclSolver solver(cnf.variable_count());
  solver.set_conflict_budget(options.conflict_budget);
  bool ok = true;
  for (const auto& clause : cnf.clauses()) ok = ok && solver.add_clause(clause);

  std::vector<int> fault_vars;
  for (const auto& f : fc.fault_inputs) fault_vars.push_back(cnf.variable(f));
  std::vector<std::uint64_t> n(fault_vars.size(), 0);
  std::uint64_t d = 0;
  std::vector<int> blocking;

  while (ok) {
    auto result = solver.solve();
    if (result == CdclSolver::Result::Unsat) break;
    if (result == CdclSolver::Result::Unknown)
      throw ResourceLimit("SAT conflict budget exhausted after " + std::to_string(d) + " diagnoses");
    Model model(solver.model());
    if (!model.satisfies(cnf)) throw std::logic_error("solver returned a model that violates the formula");

    blocking.clear();
    Assignment gamma;
    for (std::size_t k = 0; k < fault_vars.size(); ++k) {
      const bool on = model.value(fault_vars[k]);
      if (on) ++n[k];
      blocking.push_back(on ? -fault_vars[k] : fault_vars[k]);
      if (visit) gamma.emplace(fc.fault_inputs[k], on);
    }
    ++d;
    if (visit) visit(gamma);
    // With no fault inputs the only diagnosis is the empty one.
    if (blocking.empty()) break;
    ok = solver.add_clause(blocking);
  }
  return FaultDistribution(fc.fault_inputs, std::move(n), d);
}

}  // namespace qdiag
