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

#include "qdiag/generators.hpp"

#include <deque>
#include <string>
#include <vector>

#include "qdiag/error.hpp"

namespace qdiag {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::RippleAdder: return "ripple_adder";
    case Family::RippleSubtractor: return "ripple_subtractor";
    case Family::Multiplexer: return "multiplexer";
    case Family::Demultiplexer: return "demultiplexer";
    case Family::Comparator: return "comparator";
    case Family::BarrelShifter: return "barrel_shifter";
    case Family::Multiplier: return "multiplier";
    case Family::MultioperandAdder: return "multioperand_adder";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : kAllFamilies)
    if (to_string(f) == name) return f;
  if (name == "adder") return Family::RippleAdder;
  if (name == "subtractor") return Family::RippleSubtractor;
  if (name == "mux") return Family::Multiplexer;
  if (name == "demux") return Family::Demultiplexer;
  if (name == "shifter") return Family::BarrelShifter;
  if (name == "multiadd") return Family::MultioperandAdder;
  return std::nullopt;
}

namespace {

std::string bit(std::string_view stem, int k) { return std::string(stem) + std::to_string(k); }

class Builder {
 public:
  void input(std::string name) { inputs_.push_back(std::move(name)); }
  void output(std::string name) { outputs_.push_back(std::move(name)); }

  std::string gate(GateKind kind, std::vector<std::string> in, std::string out = {}) {
    if (out.empty()) out = "n" + std::to_string(next_++);
    gates_.push_back(Gate{kind, std::move(in), out});
    return out;
  }
  std::string not_(const std::string& a, std::string out = {}) { return gate(GateKind::Not, {a}, std::move(out)); }
  std::string and_(const std::string& a, const std::string& b, std::string out = {}) {
    return gate(GateKind::And2, {a, b}, std::move(out));
  }
  std::string or_(const std::string& a, const std::string& b, std::string out = {}) {
    return gate(GateKind::Or2, {a, b}, std::move(out));
  }
  std::string xor_(const std::string& a, const std::string& b, std::string out = {}) {
    return gate(GateKind::Xor2, {a, b}, std::move(out));
  }

  /// Left-leaning chain ((t0 op t1) op t2) ...; the last gate drives `out` if given.
  std::string chain(GateKind kind, const std::vector<std::string>& terms, std::string out = {}) {
    auto acc = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k)
      acc = gate(kind, {acc, terms[k]}, k + 1 == terms.size() ? out : std::string{});
    return acc;
  }

  /// Full adder; returns {sum, carry}.
  std::pair<std::string, std::string> full_add(const std::string& a, const std::string& b, const std::string& c,
                                               std::string sum = {}, std::string carry = {}) {
    auto t = xor_(a, b);
    auto s = xor_(t, c, std::move(sum));
    auto u = and_(a, b);
    auto v = and_(t, c);
    auto co = or_(u, v, std::move(carry));
    return {s, co};
  }

  std::pair<std::string, std::string> half_add(const std::string& a, const std::string& b) {
    auto s = xor_(a, b);
    auto c = and_(a, b);
    return {s, c};
  }

  /// Sums the bits in each weight column with full/half adders and emits one
  /// output per non-empty column, named stem0, stem1, ...
  void reduce_columns(std::vector<std::deque<std::string>> columns, std::string_view stem) {
    // Carries never climb more than a few columns past the top operand column.
    columns.resize(columns.size() + 4);
    for (std::size_t w = 0; w < columns.size(); ++w) {
      auto& col = columns[w];
      auto carry_to = [&](std::string c) { columns.at(w + 1).push_back(std::move(c)); };
      while (col.size() >= 3) {
        auto a = col.front(); col.pop_front();
        auto b = col.front(); col.pop_front();
        auto c = col.front(); col.pop_front();
        auto [s, co] = full_add(a, b, c);
        col.push_back(s);
        carry_to(co);
      }
      if (col.size() == 2) {
        auto [s, co] = half_add(col[0], col[1]);
        col = {s};
        carry_to(co);
      }
      if (col.empty()) continue;
      auto name = bit(stem, static_cast<int>(w));
      // Outputs keep their port names: rename the driving gate when possible.
      bool renamed = false;
      for (auto& g : gates_) {
        if (g.output == col.front()) {
          for (auto& other : gates_)
            for (auto& in : other.inputs)
              if (in == g.output) in = name;
          for (auto& rest : columns)
            for (auto& pending : rest)
              if (pending == g.output) pending = name;
          g.output = name;
          renamed = true;
          break;
        }
      }
      output(renamed ? name : col.front());
    }
  }

  Circuit build() { return Circuit(std::move(inputs_), std::move(outputs_), std::move(gates_)); }

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<Gate> gates_;
  int next_ = 0;
};

Circuit full_adder() {
  Builder b;
  for (auto n : {"i1", "i2", "ci"}) b.input(n);
  b.output("sigma");
  b.output("co");
  b.and_("i1", "i2", "z1");
  b.xor_("i1", "i2", "z2");
  b.and_("z2", "ci", "z3");
  b.xor_("z2", "ci", "sigma");
  b.or_("z1", "z3", "co");
  return b.build();
}

Circuit ripple_adder(int w) {
  if (w == 1) return full_adder();
  Builder b;
  for (int k = 0; k < w; ++k) b.input(bit("a", k));
  for (int k = 0; k < w; ++k) b.input(bit("b", k));
  b.input("cin");
  std::string carry = "cin";
  for (int k = 0; k < w; ++k) {
    auto s = bit("s", k);
    auto [sum, co] = b.full_add(bit("a", k), bit("b", k), carry, s, k + 1 == w ? "cout" : std::string{});
    b.output(sum);
    carry = co;
  }
  b.output("cout");
  return b.build();
}

Circuit ripple_subtractor(int w) {
  Builder b;
  for (int k = 0; k < w; ++k) b.input(bit("a", k));
  for (int k = 0; k < w; ++k) b.input(bit("b", k));
  b.input("bin");
  std::string borrow = "bin";
  for (int k = 0; k < w; ++k) {
    auto a = bit("a", k), y = bit("b", k);
    auto t = b.xor_(a, y);
    b.output(b.xor_(t, borrow, bit("d", k)));
    auto na = b.not_(a);
    auto u = b.and_(na, y);
    auto nt = b.not_(t);
    auto v = b.and_(nt, borrow);
    borrow = b.or_(u, v, k + 1 == w ? "bout" : std::string{});
  }
  b.output("bout");
  return b.build();
}

/// Select-literal terms for line `line` of a 2^w decoder.
std::vector<std::string> select_terms(int line, int w, const std::vector<std::string>& s,
                                      const std::vector<std::string>& ns) {
  std::vector<std::string> terms;
  for (int j = 0; j < w; ++j) terms.push_back(((line >> j) & 1) ? s[j] : ns[j]);
  return terms;
}

Circuit multiplexer(int w) {
  if (w > 4) throw UsageError("multiplexer supports at most 4 select bits");
  Builder b;
  std::vector<std::string> s, ns;
  for (int j = 0; j < w; ++j) b.input(s.emplace_back(bit("s", j)));
  for (int i = 0; i < (1 << w); ++i) b.input(bit("d", i));
  b.output("y");
  for (int j = 0; j < w; ++j) ns.push_back(b.not_(s[j]));
  std::vector<std::string> lines;
  for (int i = 0; i < (1 << w); ++i) {
    auto terms = select_terms(i, w, s, ns);
    terms.push_back(bit("d", i));
    lines.push_back(b.chain(GateKind::And2, terms));
  }
  b.chain(GateKind::Or2, lines, "y");
  return b.build();
}

Circuit demultiplexer(int w) {
  if (w > 4) throw UsageError("demultiplexer supports at most 4 select bits");
  Builder b;
  std::vector<std::string> s, ns;
  b.input("x");
  for (int j = 0; j < w; ++j) b.input(s.emplace_back(bit("s", j)));
  for (int j = 0; j < w; ++j) ns.push_back(b.not_(s[j]));
  for (int i = 0; i < (1 << w); ++i) {
    auto terms = select_terms(i, w, s, ns);
    terms.insert(terms.begin(), "x");
    b.output(b.chain(GateKind::And2, terms, bit("y", i)));
  }
  return b.build();
}

Circuit comparator(int w) {
  Builder b;
  for (int k = 0; k < w; ++k) b.input(bit("a", k));
  for (int k = 0; k < w; ++k) b.input(bit("b", k));
  for (auto n : {"lt", "eq", "gt"}) b.output(n);
  // Fold from the most significant bit: lt = lt_hi ∨ (eq_hi ∧ lt_rest), same for gt.
  std::string lt, eq, gt;
  for (int k = w - 1; k >= 0; --k) {
    auto a = bit("a", k), y = bit("b", k);
    bool last = k == 0;
    auto na = b.not_(a);
    auto nb = b.not_(y);
    auto lt_k = b.and_(na, y, last && w == 1 ? "lt" : std::string{});
    auto gt_k = b.and_(a, nb, last && w == 1 ? "gt" : std::string{});
    auto x = b.xor_(a, y);
    auto eq_k = b.not_(x, last && w == 1 ? "eq" : std::string{});
    if (k == w - 1) {
      lt = lt_k, eq = eq_k, gt = gt_k;
      continue;
    }
    lt = b.or_(lt, b.and_(eq, lt_k), last ? "lt" : std::string{});
    gt = b.or_(gt, b.and_(eq, gt_k), last ? "gt" : std::string{});
    eq = b.and_(eq, eq_k, last ? "eq" : std::string{});
  }
  return b.build();
}

Circuit barrel_shifter(int w) {
  if (w < 2 || (w & (w - 1)) != 0 || w > 16)
    throw UsageError("barrel_shifter width must be a power of two between 2 and 16");
  int stages = 0;
  while ((1 << stages) < w) ++stages;
  Builder b;
  for (int k = 0; k < w; ++k) b.input(bit("d", k));
  for (int j = 0; j < stages; ++j) b.input(bit("s", j));
  std::vector<std::string> cur;
  for (int k = 0; k < w; ++k) cur.push_back(bit("d", k));
  for (int j = 0; j < stages; ++j) {
    auto sel = bit("s", j);
    auto nsel = b.not_(sel);
    bool last = j + 1 == stages;
    std::vector<std::string> next;
    int shift = 1 << j;
    for (int k = 0; k < w; ++k) {
      auto keep = b.and_(nsel, cur[k]);
      auto moved = b.and_(sel, cur[(k - shift + w) % w]);
      next.push_back(b.or_(keep, moved, last ? bit("y", k) : std::string{}));
    }
    cur = std::move(next);
  }
  for (const auto& y : cur) b.output(y);
  return b.build();
}

Circuit multiplier(int w) {
  if (w > 6) throw UsageError("multiplier supports widths up to 6");
  Builder b;
  for (int k = 0; k < w; ++k) b.input(bit("a", k));
  for (int k = 0; k < w; ++k) b.input(bit("b", k));
  std::vector<std::deque<std::string>> columns(2 * w);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) columns[i + j].push_back(b.and_(bit("a", i), bit("b", j)));
  b.reduce_columns(std::move(columns), "p");
  return b.build();
}

Circuit multioperand_adder(int w) {
  if (w > 8) throw UsageError("multioperand_adder supports widths up to 8");
  Builder b;
  std::vector<std::deque<std::string>> columns(w);
  for (auto stem : {"a", "b", "c"})
    for (int k = 0; k < w; ++k) {
      b.input(bit(stem, k));
      columns[k].push_back(bit(stem, k));
    }
  b.reduce_columns(std::move(columns), "s");
  return b.build();
}

}  // namespace

Circuit generate_benchmark(Family family, int width) {
  if (width < 1) throw UsageError("benchmark width must be at least 1");
  if (width > 16) throw UsageError("benchmark width must be at most 16");
  switch (family) {
    case Family::RippleAdder: return ripple_adder(width);
    case Family::RippleSubtractor: return ripple_subtractor(width);
    case Family::Multiplexer: return multiplexer(width);
    case Family::Demultiplexer: return demultiplexer(width);
    case Family::Comparator: return comparator(width);
    case Family::BarrelShifter: return barrel_shifter(width);
    case Family::Multiplier: return multiplier(width);
    case Family::MultioperandAdder: return multioperand_adder(width);
  }
  throw UsageError("unknown benchmark family");
}

}  // namespace qdiag
