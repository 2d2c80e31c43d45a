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

// Reference implementations used only by tests. They avoid the library's
// evaluator, solver and simulators so that agreement means something.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qdiag/faultlab.hpp"
#include "qdiag/netlist.hpp"
#include "qdiag/qcompile.hpp"
#include "qdiag/sparse_state.hpp"

namespace qdiag::oracle {

/// Evaluates by sweeping the gate list until nothing changes.
inline std::map<std::string, bool> sweep_eval(const Circuit& c, const std::map<std::string, bool>& inputs) {
  std::map<std::string, bool> value = inputs;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : c.gates()) {
      if (value.count(g.output)) continue;
      bool ready = std::all_of(g.inputs.begin(), g.inputs.end(), [&](const auto& w) { return value.count(w) > 0; });
      if (!ready) continue;
      const bool a = value.at(g.inputs[0]);
      const bool b = g.inputs.size() > 1 ? value.at(g.inputs[1]) : false;
      bool out = false;
      switch (g.kind) {
        case GateKind::Not: out = !a; break;
        case GateKind::And2: out = a && b; break;
        case GateKind::Or2: out = a || b; break;
        case GateKind::Xor2: out = a != b; break;
      }
      value[g.output] = out;
      changed = true;
    }
  }
  return value;
}

/// Input assignment whose k-th input takes bit k of `bits`.
inline std::map<std::string, bool> unpack(const std::vector<std::string>& names, std::uint64_t bits) {
  std::map<std::string, bool> a;
  for (std::size_t k = 0; k < names.size(); ++k) a[names[k]] = (bits >> k) & 1U;
  return a;
}

struct BruteDiagnosis {
  std::uint64_t d = 0;
  std::map<std::string, std::uint64_t> count;
};

/// Counts fault assignments that reproduce beta under alpha, by truth table.
inline BruteDiagnosis brute_diagnose(const FaultCircuit& fc, const Assignment& alpha, const Assignment& beta) {
  BruteDiagnosis r;
  for (const auto& f : fc.fault_inputs) r.count[f] = 0;
  const auto n = fc.fault_inputs.size();
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) {
    auto in = unpack(fc.fault_inputs, g);
    for (const auto& [k, v] : alpha) in[k] = v;
    const auto value = sweep_eval(fc.circuit, in);
    bool match = std::all_of(beta.begin(), beta.end(), [&](const auto& kv) { return value.at(kv.first) == kv.second; });
    if (!match) continue;
    ++r.d;
    for (std::size_t k = 0; k < n; ++k)
      if ((g >> k) & 1U) ++r.count[fc.fault_inputs[k]];
  }
  return r;
}

/// Ranks with ties averaged (1-based).
inline std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

/// Spearman rank correlation: Pearson correlation of the average ranks.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

struct FidelityReport {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
};

/// Runs the compiled oracle of `c` on every basis input and compares every
/// ancilla with the sweep evaluator; inputs must come back unchanged.
inline FidelityReport oracle_fidelity(const Circuit& c) {
  const auto qc = make_oracle(c, CompileOptions{SparseState::kMaxQubits});
  const auto n = c.inputs().size();
  FidelityReport report;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto run = qc;
    for (std::size_t k = 0; k < n; ++k) run.init[qc.wire_map.at(c.inputs()[k])] = (bits >> k) & 1U;
    const auto state = run_sparse(run);
    ++report.cases;
    if (state.size() != 1 || std::abs(state.entries()[0].second - Amplitude{1.0, 0.0}) > 1e-12) {
      ++report.mismatches;
      continue;
    }
    const auto& key = state.entries()[0].first;
    const auto expect = sweep_eval(c, unpack(c.inputs(), bits));
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) ok &= test_bit(key, qc.wire_map.at(c.inputs()[k])) == ((bits >> k) & 1U);
    for (const auto& g : c.gates()) ok &= test_bit(key, qc.wire_map.at(g.output)) == expect.at(g.output);
    if (!ok) ++report.mismatches;
  }
  return report;
}

}  // namespace qdiag::oracle
