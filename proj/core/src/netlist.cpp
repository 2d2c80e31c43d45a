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

#include "qdiag/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "qdiag/error.hpp"

namespace qdiag {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::And2: return "AND";
    case GateKind::Or2: return "OR";
    case GateKind::Xor2: return "XOR";
  }
  return "?";
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_name(std::string_view s) {
  return !s.empty() && is_name_start(s.front()) && std::all_of(s.begin(), s.end(), is_name_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Assignment parse_assignment(std::string_view text) {
  Assignment result;
  text = trim(text);
  if (text.empty()) return result;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = trim(text.substr(pos, comma - pos));
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw AssignmentError("expected name=0|1, got '" + std::string(item) + "'");
    auto name = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    if (!valid_name(name)) throw AssignmentError("invalid wire name '" + std::string(name) + "'");
    if (value != "0" && value != "1")
      throw AssignmentError("value of '" + std::string(name) + "' must be 0 or 1");
    if (!result.emplace(std::string(name), value == "1").second)
      throw AssignmentError("wire '" + std::string(name) + "' bound twice");
    pos = comma + 1;
  }
  return result;
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ',';
    out += name;
    out += value ? "=1" : "=0";
  }
  return out;
}

std::vector<std::size_t> topo_sort(std::span<const Gate> gates, std::span<const std::string> inputs) {
  std::unordered_map<std::string_view, std::size_t> driver;
  for (std::size_t g = 0; g < gates.size(); ++g) driver.emplace(gates[g].output, g);
  std::unordered_set<std::string_view> primary(inputs.begin(), inputs.end());

  // Kahn's algorithm; the min-heap keeps ties in declaration order.
  std::vector<std::size_t> pending(gates.size(), 0);
  std::vector<std::vector<std::size_t>> fanout(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (const auto& in : gates[g].inputs) {
      if (primary.contains(in)) continue;
      auto it = driver.find(in);
      if (it == driver.end()) throw CircuitError("wire '" + in + "' is used but never driven");
      ++pending[g];
      fanout[it->second].push_back(g);
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t g = 0; g < gates.size(); ++g)
    if (pending[g] == 0) ready.push(g);

  std::vector<std::size_t> order;
  order.reserve(gates.size());
  while (!ready.empty()) {
    auto g = ready.top();
    ready.pop();
    order.push_back(g);
    for (auto succ : fanout[g])
      if (--pending[succ] == 0) ready.push(succ);
  }
  if (order.size() != gates.size()) {
    // Every unscheduled gate lies on or downstream of a cycle; walk predecessors
    // until a gate repeats to report a wire that is actually on the cycle.
    std::size_t g = 0;
    while (pending[g] == 0) ++g;
    std::vector<bool> seen(gates.size(), false);
    while (!seen[g]) {
      seen[g] = true;
      for (const auto& in : gates[g].inputs) {
        auto it = driver.find(in);
        if (it != driver.end() && pending[it->second] != 0 && !primary.contains(in)) {
          g = it->second;
          break;
        }
      }
    }
    throw CycleError(gates[g].output);
  }
  return order;
}

Circuit::Circuit(std::vector<std::string> inputs, std::vector<std::string> outputs,
                 std::vector<Gate> gates)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), gates_(std::move(gates)) {
  auto add_wire = [this](const std::string& name, const char* role) {
    if (!valid_name(name)) throw CircuitError("invalid wire name '" + name + "'");
    if (!index_.emplace(name, wires_.size()).second) {
      throw CircuitError(std::string("wire '") + name + "' has more than one driver (" + role + ")");
    }
    wires_.push_back(name);
  };
  for (const auto& in : inputs_) add_wire(in, "primary input");
  for (const auto& g : gates_) {
    if (g.inputs.size() != arity(g.kind)) {
      throw CircuitError(std::string(to_string(g.kind)) + " gate driving '" + g.output + "' needs " +
                         std::to_string(arity(g.kind)) + " input(s)");
    }
    if (g.inputs.size() == 2 && g.inputs[0] == g.inputs[1])
      throw CircuitError("gate driving '" + g.output + "' reads wire '" + g.inputs[0] + "' twice");
    add_wire(g.output, "gate output");
  }
  for (const auto& g : gates_)
    for (const auto& in : g.inputs)
      if (!index_.contains(in)) throw CircuitError("undeclared wire '" + in + "'");
  std::unordered_set<std::string> seen_outputs;
  for (const auto& out : outputs_) {
    if (!index_.contains(out)) throw CircuitError("primary output '" + out + "' names no wire");
    if (!seen_outputs.insert(out).second) throw CircuitError("primary output '" + out + "' declared twice");
  }
  topo_ = topo_sort(gates_, inputs_);
}

bool Circuit::has_wire(std::string_view name) const { return index_.contains(std::string(name)); }

bool Circuit::is_input(std::string_view name) const {
  return std::find(inputs_.begin(), inputs_.end(), name) != inputs_.end();
}

std::size_t Circuit::wire_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw CircuitError("unknown wire '" + std::string(name) + "'");
  return it->second;
}

std::vector<Gate> topo_sort(const Circuit& c) {
  std::vector<Gate> sorted;
  sorted.reserve(c.gates().size());
  for (auto g : c.topological_order()) sorted.push_back(c.gates()[g]);
  return sorted;
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  std::string name() {
    skip_ws();
    if (pos_ >= line_.size() || !is_name_start(line_[pos_])) fail("expected a wire name");
    auto start = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) const {
    throw ParseError(line_no_, column, what);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

struct Located {
  std::size_t line;
  std::size_t column;
};

std::string where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

Circuit parse_bench(std::string_view text) {
  std::vector<std::string> inputs, outputs;
  std::vector<Gate> gates;
  std::unordered_map<std::string, Located> defined;
  std::vector<std::pair<std::string, Located>> uses;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    LineParser p(raw, line_no);
    if (p.at_end()) continue;
    auto head_col = p.column();
    auto head = p.name();
    if (p.accept('(')) {
      auto name_col = p.column();
      auto wire = p.name();
      p.expect(')');
      if (!p.at_end()) p.fail("unexpected trailing text");
      if (head == "INPUT") {
        if (!defined.emplace(wire, Located{line_no, name_col}).second)
          throw CircuitError(where(line_no, name_col) + "wire '" + wire + "' has more than one driver");
        inputs.push_back(wire);
      } else if (head == "OUTPUT") {
        if (std::find(outputs.begin(), outputs.end(), wire) != outputs.end())
          throw CircuitError(where(line_no, name_col) + "output '" + wire + "' declared twice");
        outputs.push_back(wire);
        uses.emplace_back(wire, Located{line_no, name_col});
      } else {
        p.fail_at(head_col, "unknown declaration '" + head + "'");
      }
      continue;
    }
    p.expect('=');
    auto kind_col = p.column();
    auto kind_name = p.name();
    GateKind kind;
    if (kind_name == "AND") kind = GateKind::And2;
    else if (kind_name == "OR") kind = GateKind::Or2;
    else if (kind_name == "XOR") kind = GateKind::Xor2;
    else if (kind_name == "NOT") kind = GateKind::Not;
    else p.fail_at(kind_col, "unknown gate kind '" + kind_name + "'");
    p.expect('(');
    Gate gate{kind, {}, head};
    do {
      auto col = p.column();
      auto wire = p.name();
      uses.emplace_back(wire, Located{line_no, col + 0});
      gate.inputs.push_back(std::move(wire));
    } while (p.accept(','));
    p.expect(')');
    if (!p.at_end()) p.fail("unexpected trailing text");
    if (gate.inputs.size() != arity(kind)) {
      p.fail_at(kind_col, kind_name + " takes " + std::to_string(arity(kind)) + " input(s), got " +
                              std::to_string(gate.inputs.size()));
    }
    if (!defined.emplace(head, Located{line_no, head_col}).second)
      throw CircuitError(where(line_no, head_col) + "wire '" + head + "' has more than one driver");
    gates.push_back(std::move(gate));
  }

  for (const auto& [wire, loc] : uses)
    if (!defined.contains(wire)) throw CircuitError(where(loc.line, loc.column) + "undeclared wire '" + wire + "'");

  return Circuit(std::move(inputs), std::move(outputs), std::move(gates));
}

std::string render_bench(const Circuit& c) {
  std::ostringstream out;
  for (const auto& in : c.inputs()) out << "INPUT(" << in << ")\n";
  for (const auto& o : c.outputs()) out << "OUTPUT(" << o << ")\n";
  for (const auto& g : c.gates()) {
    out << g.output << " = " << to_string(g.kind) << '(';
    for (std::size_t k = 0; k < g.inputs.size(); ++k) out << (k ? ", " : "") << g.inputs[k];
    out << ")\n";
  }
  return out.str();
}

CircuitEvaluator::CircuitEvaluator(const Circuit& c)
    : input_count_(c.inputs().size()), wire_count_(c.wires().size()) {
  steps_.reserve(c.gates().size());
  for (auto g : c.topological_order()) {
    const auto& gate = c.gates()[g];
    auto a = c.wire_index(gate.inputs[0]);
    auto b = gate.inputs.size() > 1 ? c.wire_index(gate.inputs[1]) : a;
    steps_.push_back({gate.kind, a, b, c.wire_index(gate.output)});
  }
  for (const auto& o : c.outputs()) outputs_.push_back(c.wire_index(o));
}

std::vector<std::uint8_t> CircuitEvaluator::run(std::span<const std::uint8_t> inputs) const {
  if (inputs.size() != input_count_) throw AssignmentError("input vector has the wrong length");
  std::vector<std::uint8_t> values(wire_count_, 0);
  std::copy(inputs.begin(), inputs.end(), values.begin());
  for (const auto& s : steps_) values[s.out] = apply(s.kind, values[s.a] != 0, values[s.b] != 0);
  return values;
}

std::vector<std::uint8_t> CircuitEvaluator::outputs_for(std::uint64_t bits) const {
  std::vector<std::uint8_t> in(input_count_);
  for (std::size_t k = 0; k < input_count_; ++k) in[k] = (bits >> k) & 1U;
  auto values = run(in);
  std::vector<std::uint8_t> out;
  out.reserve(outputs_.size());
  for (auto o : outputs_) out.push_back(values[o]);
  return out;
}

Assignment evaluate(const Circuit& c, const Assignment& alpha) {
  std::vector<std::uint8_t> in;
  in.reserve(c.inputs().size());
  for (const auto& name : c.inputs()) {
    auto it = alpha.find(name);
    if (it == alpha.end()) throw AssignmentError("primary input '" + name + "' is not bound");
    in.push_back(it->second);
  }
  if (alpha.size() != c.inputs().size()) {
    for (const auto& [name, value] : alpha)
      if (!c.is_input(name)) throw AssignmentError("'" + name + "' is not a primary input");
  }
  auto values = CircuitEvaluator(c).run(in);
  Assignment out;
  for (std::size_t w = 0; w < values.size(); ++w) out.emplace(c.wires()[w], values[w] != 0);
  return out;
}

Assignment restrict_to(const Assignment& a, std::span<const std::string> names) {
  Assignment out;
  for (const auto& n : names) {
    auto it = a.find(n);
    if (it == a.end()) throw AssignmentError("wire '" + n + "' is not bound");
    out.emplace(n, it->second);
  }
  return out;
}

}  // namespace qdiag
