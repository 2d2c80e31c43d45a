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
#include <optional>
#include <span>
#include <vector>

#include "qdiag/cnf.hpp"

namespace qdiag {

/// Incremental conflict-driven clause-learning SAT solver.
///
/// Two-literal watching, first-UIP learning with clause minimization, VSIDS
/// branching with phase saving, and Luby restarts. Clauses may be added
/// between calls to solve(); learnt clauses are kept across calls.
/// Variables use DIMACS ids 1..n.
class CdclSolver {
 public:
  enum class Result { Sat, Unsat, Unknown };

  CdclSolver() = default;
  explicit CdclSolver(std::size_t variables) { reserve_variables(variables); }

  int new_variable();
  void reserve_variables(std::size_t n);
  std::size_t variable_count() const noexcept { return assigns_.size(); }

  /// Adds a clause. Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(std::span<const int> literals);

  /// Conflicts allowed per solve() call; nullopt means unlimited.
  void set_conflict_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }

  Result solve();

  /// Model of the last Sat answer, indexed by variable id - 1.
  const std::vector<std::uint8_t>& model() const noexcept { return model_; }

  std::uint64_t conflicts() const noexcept { return conflicts_; }
  std::uint64_t decisions() const noexcept { return decisions_; }

 private:
  using Lit = std::uint32_t;  // 2 * var + negated
  using ClauseRef = std::uint32_t;
  static constexpr ClauseRef kNoReason = UINT32_MAX;

  struct Clause {
    std::vector<Lit> lits;
    bool learnt = false;
  };

  static Lit to_lit(int dimacs) {
    auto v = static_cast<Lit>((dimacs > 0 ? dimacs : -dimacs) - 1);
    return 2 * v + (dimacs < 0 ? 1U : 0U);
  }
  static std::uint32_t var(Lit l) { return l >> 1; }
  static Lit neg(Lit l) { return l ^ 1U; }

  // 1 true, 0 false, -1 unassigned.
  int value(Lit l) const {
    auto a = assigns_[var(l)];
    return a < 0 ? -1 : (a ^ static_cast<int>(l & 1U));
  }
  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  void enqueue(Lit l, ClauseRef reason);
  ClauseRef propagate();
  void analyze(ClauseRef conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack_level);
  void backtrack(std::uint32_t level);
  ClauseRef attach(std::vector<Lit> lits, bool learnt);
  std::optional<Lit> pick_branch();
  void bump(std::uint32_t v);

  // VSIDS heap keyed by activity.
  void heap_insert(std::uint32_t v);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  std::uint32_t heap_pop();
  bool heap_contains(std::uint32_t v) const { return heap_pos_[v] >= 0; }

  std::vector<Clause> clauses_;
  std::vector<std::vector<ClauseRef>> watches_;  // by literal
  std::vector<int> assigns_;
  std::vector<std::uint8_t> saved_phase_;
  std::vector<std::uint32_t> level_;
  std::vector<ClauseRef> reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int64_t> heap_pos_;

  std::vector<std::uint8_t> seen_;
  std::vector<Lit> analyze_clear_;

  std::vector<std::uint8_t> model_;
  bool ok_ = true;
  std::optional<std::uint64_t> budget_;
  std::uint64_t conflicts_ = 0;
  std::uint64_t decisions_ = 0;
};

struct SolveOptions {
  std::optional<std::uint64_t> conflict_budget;
};

/// Solves `cnf`. Returns a model (checked against every clause) or nullopt
/// when unsatisfiable. Throws ResourceLimit when the conflict budget runs out.
std::optional<Model> sat_solve(const CnfFormula& cnf, const SolveOptions& options = {});

}  // namespace qdiag
