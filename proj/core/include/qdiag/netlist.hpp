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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qdiag {

/// The standard basis: inverter plus two-input AND, OR and XOR.
enum class GateKind : std::uint8_t { Not, And2, Or2, Xor2 };

std::string_view to_string(GateKind kind);

/// Number of inputs a gate of `kind` takes (1 for NOT, 2 otherwise).
constexpr std::size_t arity(GateKind kind) { return kind == GateKind::Not ? 1 : 2; }

/// Truth table of a single gate. `b` is ignored for NOT.
constexpr bool apply(GateKind kind, bool a, bool b) {
  switch (kind) {
    case GateKind::Not: return !a;
    case GateKind::And2: return a && b;
    case GateKind::Or2: return a || b;
    case GateKind::Xor2: return a != b;
  }
  return false;
}

struct Gate {
  GateKind kind;
  std::vector<std::string> inputs;
  std::string output;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Wire name → Boolean value. Ordered so that iteration and serialization are deterministic.
using Assignment = std::map<std::string, bool>;

/// Parses `name=0,name=1,...` (whitespace tolerant). Empty text gives an empty assignment.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& a);

/// A combinational gate-level netlist over the standard basis.
///
/// Construction validates the single-driver rule, that every gate input and
/// primary output names a declared wire, that two-input gates read two
/// distinct wires, and that the gate graph is acyclic. A constructed Circuit
/// is immutable.
class Circuit {
 public:
  Circuit(std::vector<std::string> inputs, std::vector<std::string> outputs,
          std::vector<Gate> gates);

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// All wires: primary inputs first, then gate outputs in declaration order.
  const std::vector<std::string>& wires() const noexcept { return wires_; }

  bool has_wire(std::string_view name) const;
  bool is_input(std::string_view name) const;
  /// Index of the wire in `wires()`; throws CircuitError if unknown.
  std::size_t wire_index(std::string_view name) const;

  /// Gate indices in topological order (ties broken by declaration order).
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ && a.gates_ == b.gates_;
  }

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<Gate> gates_;
  std::vector<std::string> wires_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> topo_;
};

/// Deterministic topological order of `gates` given the primary inputs.
/// Gates become ready once all their inputs are driven; among ready gates the
/// lowest declaration index goes first. Throws CycleError naming a wire on a
/// cycle, CircuitError for undriven inputs.
std::vector<std::size_t> topo_sort(std::span<const Gate> gates, std::span<const std::string> inputs);

/// The circuit's gates in topological order.
std::vector<Gate> topo_sort(const Circuit& c);

/// Parses the line-oriented bench format:
///
///     # comment
///     INPUT(a)
///     OUTPUT(y)
///     y = AND(a, b)        # also OR, XOR, NOT
///
/// Gates may reference wires declared further down. Throws ParseError (with
/// line and column) for malformed text, CircuitError for duplicate drivers and
/// undeclared wires (location in the message), CycleError for cycles.
Circuit parse_bench(std::string_view text);

/// Renders a circuit in the bench format accepted by parse_bench.
std::string render_bench(const Circuit& c);

/// Compiled evaluator over wire indices. Useful when the same circuit is
/// evaluated on many input vectors.
class CircuitEvaluator {
 public:
  explicit CircuitEvaluator(const Circuit& c);

  /// `inputs[k]` is the value of `c.inputs()[k]`. Returns one value per wire in
  /// `c.wires()` order.
  std::vector<std::uint8_t> run(std::span<const std::uint8_t> inputs) const;

  /// Output values for an input vector packed into the low bits of `bits`
  /// (bit k = input k). Requires at most 64 inputs.
  std::vector<std::uint8_t> outputs_for(std::uint64_t bits) const;

 private:
  struct Step {
    GateKind kind;
    std::size_t a;
    std::size_t b;
    std::size_t out;
  };
  std::size_t input_count_;
  std::size_t wire_count_;
  std::vector<Step> steps_;
  std::vector<std::size_t> outputs_;
};

/// Classical evaluation. `alpha` must bind exactly the primary inputs.
/// Returns bindings for every wire.
Assignment evaluate(const Circuit& c, const Assignment& alpha);

/// Restriction of an assignment to the given wire names (all must be bound).
Assignment restrict_to(const Assignment& a, std::span<const std::string> names);

}  // namespace qdiag
