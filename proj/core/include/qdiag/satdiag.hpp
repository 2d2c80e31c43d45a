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
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qdiag/cnf.hpp"
#include "qdiag/faultlab.hpp"

namespace qdiag {

/// Tseitin encoding of `fc.circuit` plus unit clauses for `alpha` and `beta`.
///
/// Variables are registered in `fc.circuit.wires()` order. Per gate: NOT → 2
/// clauses, AND/OR → 3, XOR → 4. `alpha` must bind exactly the observed
/// (non-fault) inputs and `beta` exactly the primary outputs.
CnfFormula to_cnf(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta);

/// Non-negative fraction kept unreduced (denominator = diagnosis count).
struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  Rational reduced() const {
    const auto g = std::gcd(numerator, denominator);
    return g == 0 ? *this : Rational{numerator / g, denominator / g};
  }
  /// Equal as fractions: 12/22 == 6/11.
  friend bool operator==(const Rational& a, const Rational& b) {
    const auto x = a.reduced(), y = b.reduced();
    return x.numerator == y.numerator && x.denominator == y.denominator;
  }
};

/// Exact conditional fault probabilities n[f] / d.
class FaultDistribution {
 public:
  FaultDistribution(std::vector<std::string> faults, std::vector<std::uint64_t> counts, std::uint64_t diagnoses);

  const std::vector<std::string>& faults() const noexcept { return faults_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t diagnoses() const noexcept { return diagnoses_; }

  /// False when no fault assignment explains the observation (d = 0).
  bool consistent() const noexcept { return diagnoses_ > 0; }

  /// n[f] / d. Throws InconsistentObservation when d = 0.
  Rational probability(std::string_view fault) const;
  /// Probabilities as doubles keyed by fault name. Throws when d = 0.
  std::map<std::string, double> probabilities() const;

 private:
  std::vector<std::string> faults_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t diagnoses_;
};

struct SatDiagOptions {
  /// Conflict budget for each SAT call.
  std::optional<std::uint64_t> conflict_budget;
};

/// Called once per diagnosis with the fault-input restriction of the model.
using DiagnosisVisitor = std::function<void(const Assignment& gamma)>;

/// Enumerates every diagnosis with repeated SAT calls. After each model the
/// counters of the faults it sets are incremented, d is incremented once,
/// and one blocking clause over the fault literals is added. Ends at UNSAT.
/// A d = 0 result is returned (not thrown); query it with consistent().
FaultDistribution circuit_health_sat(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta,
                                     const SatDiagOptions& options = {}, const DiagnosisVisitor& visit = {});

}  // namespace qdiag
