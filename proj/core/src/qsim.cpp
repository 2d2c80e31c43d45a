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

#include "qdiag/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "qdiag/error.hpp"
#include "qdiag/rng.hpp"

namespace qdiag {

namespace {

constexpr std::size_t kMaxDenseQubits = 40;

void check_subset(std::span<const std::size_t> qubits, std::size_t qubit_count) {
  if (qubits.empty()) throw UsageError("qubit subset must not be empty");
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] >= qubit_count) throw UsageError("qubit " + std::to_string(qubits[k]) + " out of range");
    for (std::size_t j = 0; j < k; ++j)
      if (qubits[j] == qubits[k]) throw UsageError("qubit subset contains duplicates");
  }
}

// Visits every index with bit `t` clear whose `control_mask` bits are all set.
template <typename F>
void for_each_pair(std::size_t size, std::size_t t, std::size_t control_mask, F&& f) {
  const std::size_t stride = std::size_t{1} << t;
  for (std::size_t base = 0; base < size; base += 2 * stride)
    for (std::size_t i = base; i < base + stride; ++i)
      if ((i & control_mask) == control_mask) f(i, i | stride);
}

}  // namespace

StateVector::StateVector(std::size_t qubits) : qubits_(qubits) {
  if (qubits > kMaxDenseQubits) throw ResourceLimit("dense state of " + std::to_string(qubits) + " qubits");
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const auto n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) throw UsageError("amplitude count must be a power of two");
  StateVector s;
  s.qubits_ = static_cast<std::size_t>(std::countr_zero(n));
  s.amps_ = std::move(amplitudes);
  return s;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

void apply_gate(StateVector& state, const QuantumGate& gate) {
  gate.validate(state.qubit_count());
  auto amps = state.amplitudes();
  std::size_t mask = 0;
  for (std::size_t k = 0; k < control_count(gate.kind); ++k) mask |= std::size_t{1} << gate.controls[k];
  if (gate.kind == QuantumGateKind::H) {
    constexpr double s = std::numbers::sqrt2 / 2.0;
    for_each_pair(amps.size(), gate.target, 0, [&](std::size_t i, std::size_t j) {
      const auto a0 = amps[i], a1 = amps[j];
      amps[i] = s * (a0 + a1);
      amps[j] = s * (a0 - a1);
    });
    return;
  }
  for_each_pair(amps.size(), gate.target, mask, [&](std::size_t i, std::size_t j) { std::swap(amps[i], amps[j]); });
}

StateVector run_statevector(const QuantumCircuit& qc, const SimOptions& options) {
  if (qc.qubit_count > options.qubit_cap) {
    throw ResourceLimit("statevector needs " + std::to_string(qc.qubit_count) + " qubits, cap is " +
                        std::to_string(options.qubit_cap));
  }
  qc.validate();
  StateVector state(qc.qubit_count);
  auto step = [&](const QuantumGate& g) {
    apply_gate(state, g);
    if (options.check_normalization && std::abs(state.norm_squared() - 1.0) > kStateTolerance)
      throw std::logic_error("normalization lost after a " + std::string(to_string(g.kind)) + " gate");
  };
  for (std::size_t q = 0; q < qc.qubit_count; ++q)
    if (qc.init[q]) step(QuantumGate::x(q));
  for (const auto& g : qc.program) step(g);
  return state;
}

std::string basis_label(std::uint64_t index, std::span<const std::size_t> qubits) {
  std::string label(qubits.size(), '0');
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((index >> qubits[j]) & 1U) label[j] = '1';
  return label;
}

Distribution exact_distribution(const StateVector& state, std::span<const std::size_t> qubits) {
  check_subset(qubits, state.qubit_count());
  std::unordered_map<std::uint64_t, double> packed;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) key |= static_cast<std::uint64_t>((i >> qubits[j]) & 1U) << j;
    packed[key] += p;
  }
  Distribution d{{qubits.begin(), qubits.end()}, {}};
  for (const auto& [key, p] : packed) {
    std::string label(qubits.size(), '0');
    for (std::size_t j = 0; j < qubits.size(); ++j)
      if ((key >> j) & 1U) label[j] = '1';
    d.probability.emplace(std::move(label), p);
  }
  return d;
}

ShotHistogram sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw UsageError("shot count must be at least 1");
  if (dist.probability.empty()) throw UsageError("cannot sample an empty distribution");
  std::vector<const std::string*> labels;
  std::vector<double> cdf;
  double total = 0.0;
  for (const auto& [label, p] : dist.probability) {
    total += p;
    labels.push_back(&label);
    cdf.push_back(total);
  }
  std::vector<std::uint64_t> counts(labels.size(), 0);
  for (std::uint64_t shard = 0; shard * kShotsPerShard < shots; ++shard) {
    Rng rng(substream_seed(seed, shard));
    const auto n = std::min(kShotsPerShard, shots - shard * kShotsPerShard);
    for (std::uint64_t k = 0; k < n; ++k) {
      const double u = uniform_unit(rng) * total;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
  }
  ShotHistogram h{dist.qubits, {}, shots, seed, std::string(kRngName)};
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (counts[k]) h.counts.emplace(*labels[k], counts[k]);
  return h;
}

ShotHistogram sample(const StateVector& state, std::span<const std::size_t> qubits, std::uint64_t shots,
                     std::uint64_t seed) {
  return sample(exact_distribution(state, qubits), shots, seed);
}

}  // namespace qdiag
