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
#include <map>
#include <string>
#include <vector>

#include "qdiag/netlist.hpp"

namespace qdiag {

/// A circuit together with its assumable (fault) inputs.
///
/// The fault inputs are primary inputs of `circuit`. For a stuck-at-1
/// augmentation they are listed after the original inputs, one per original
/// gate, and `origin` maps each to the wire it guards.
struct FaultCircuit {
  Circuit circuit;
  std::vector<std::string> fault_inputs;
  std::map<std::string, std::string> origin;

  /// Primary inputs that are not fault inputs, in declaration order.
  std::vector<std::string> observed_inputs() const;
};

/// Suffix of fault input names: wire `w` gets fault input `w_sa1`.
inline constexpr std::string_view kFaultSuffix = "_sa1";

/// Inserts an OR gate with a fresh assumable input at every gate output.
/// Gate output `w` is renamed to `w_pre` and `w = OR(w_pre, w_sa1)` is added,
/// so primary input and output names are unchanged. Fault inputs follow the
/// topological gate order.
FaultCircuit augment_stuck_at_1(const Circuit& c);

/// Treats existing primary inputs of `c` as the unknowns, without rewriting.
/// Throws AssignmentError if a name is not a primary input.
FaultCircuit designate_assumables(const Circuit& c, std::vector<std::string> names);

/// Primary outputs of `fc` under inputs `alpha` and fault setting `gamma`.
/// `alpha` must cover the observed inputs and `gamma` all fault inputs.
Assignment inject_and_observe(const FaultCircuit& fc, const Assignment& alpha, const Assignment& gamma);

struct Scenario {
  Assignment alpha;
  Assignment gamma;
  Assignment beta;
  std::uint64_t seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// `count` reproducible scenarios. Scenario i is drawn from its own stream
/// seeded with substream_seed(seed, i): alpha uniformly over the observed
/// inputs, a fault cardinality uniformly in [1, max_cardinality], then a
/// uniform subset of that size; beta by inject_and_observe.
std::vector<Scenario> random_scenarios(const FaultCircuit& fc, std::size_t count, std::size_t max_cardinality,
                                       std::uint64_t seed);

}  // namespace qdiag
