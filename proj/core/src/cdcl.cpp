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

#include "qdiag/cdcl.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdiag/error.hpp"

namespace qdiag {

namespace {

constexpr double kVarDecay = 0.95;
constexpr std::uint64_t kRestartBase = 100;

/// Luby sequence 1 1 2 1 1 2 4 1 1 2 ... (0-based index).
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) >> 1;
    --seq;
    i = i % size;
  }
  return std::uint64_t{1} << seq;
}

}  // namespace

int CdclSolver::new_variable() {
  auto v = static_cast<std::uint32_t>(assigns_.size());
  assigns_.push_back(-1);
  saved_phase_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  activity_.push_back(0.0);
  heap_pos_.push_back(-1);
  seen_.push_back(0);
  watches_.resize(2 * (static_cast<std::size_t>(v) + 1));
  heap_insert(v);
  return static_cast<int>(v) + 1;
}

void CdclSolver::reserve_variables(std::size_t n) {
  while (assigns_.size() < n) new_variable();
}

bool CdclSolver::add_clause(std::span<const int> literals) {
  if (!ok_) return false;
  backtrack(0);
  std::vector<Lit> c;
  c.reserve(literals.size());
  for (auto l : literals) {
    if (l == 0) throw std::invalid_argument("literal 0 in clause");
    reserve_variables(static_cast<std::size_t>(l > 0 ? l : -l));
    c.push_back(to_lit(l));
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k + 1 < c.size() && c[k + 1] == neg(c[k]) && var(c[k]) == var(c[k + 1])) return true;  // tautology
    auto val = value(c[k]);
    if (val == 1) return true;
    if (val == 0) continue;
    c[kept++] = c[k];
  }
  c.resize(kept);
  if (c.empty()) return ok_ = false;
  if (c.size() == 1) {
    enqueue(c[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
    return ok_;
  }
  attach(std::move(c), false);
  return true;
}

CdclSolver::ClauseRef CdclSolver::attach(std::vector<Lit> lits, bool learnt) {
  auto cr = static_cast<ClauseRef>(clauses_.size());
  watches_[lits[0]].push_back(cr);
  watches_[lits[1]].push_back(cr);
  clauses_.push_back(Clause{std::move(lits), learnt});
  return cr;
}

void CdclSolver::enqueue(Lit l, ClauseRef reason) {
  auto v = var(l);
  assigns_[v] = (l & 1U) ? 0 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

CdclSolver::ClauseRef CdclSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit false_lit = neg(trail_[qhead_++]);
    auto& ws = watches_[false_lit];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const auto cr = ws[i++];
      auto& c = clauses_[cr].lits;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = cr;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(cr);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = cr;
      if (value(c[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return cr;
      }
      enqueue(c[0], cr);
    }
    ws.resize(j);
  }
  return kNoReason;
}

void CdclSolver::analyze(ClauseRef conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack_level) {
  learnt.assign(1, 0);
  int path = 0;
  bool first = true;
  Lit p = 0;
  std::size_t index = trail_.size();
  ClauseRef cr = conflict;
  do {
    const auto& c = clauses_[cr].lits;
    for (std::size_t k = first ? 0 : 1; k < c.size(); ++k) {
      const auto q = c[k];
      const auto v = var(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= decision_level()) ++path;
      else learnt.push_back(q);
    }
    first = false;
    while (!seen_[var(trail_[--index])]) {
    }
    p = trail_[index];
    cr = reason_[var(p)];
    seen_[var(p)] = 0;
    --path;
  } while (path > 0);
  learnt[0] = neg(p);

  // Local minimization: drop literals implied by other literals of the clause.
  analyze_clear_.assign(learnt.begin() + 1, learnt.end());
  std::size_t kept = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    const auto r = reason_[var(learnt[k])];
    bool redundant = r != kNoReason;
    if (redundant) {
      const auto& c = clauses_[r].lits;
      for (std::size_t m = 1; m < c.size() && redundant; ++m) {
        auto u = var(c[m]);
        redundant = seen_[u] || level_[u] == 0;
      }
    }
    if (!redundant) learnt[kept++] = learnt[k];
  }
  learnt.resize(kept);
  for (auto l : analyze_clear_) seen_[var(l)] = 0;

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[var(learnt[k])] > level_[var(learnt[best])]) best = k;
    std::swap(learnt[1], learnt[best]);
    backtrack_level = level_[var(learnt[1])];
  }
}

void CdclSolver::backtrack(std::uint32_t level) {
  if (decision_level() <= level) return;
  for (auto i = trail_.size(); i-- > trail_lim_[level];) {
    auto v = var(trail_[i]);
    saved_phase_[v] = static_cast<std::uint8_t>(assigns_[v]);
    assigns_[v] = -1;
    reason_[v] = kNoReason;
    if (!heap_contains(v)) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

std::optional<CdclSolver::Lit> CdclSolver::pick_branch() {
  while (!heap_.empty()) {
    auto v = heap_pop();
    if (assigns_[v] < 0) return 2 * v + (saved_phase_[v] ? 0U : 1U);
  }
  return std::nullopt;
}

void CdclSolver::bump(std::uint32_t v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_contains(v)) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void CdclSolver::heap_insert(std::uint32_t v) {
  heap_pos_[v] = static_cast<std::int64_t>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

void CdclSolver::heap_up(std::size_t i) {
  auto v = heap_[i];
  while (i > 0) {
    auto parent = (i - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<std::int64_t>(i);
}

void CdclSolver::heap_down(std::size_t i) {
  auto v = heap_[i];
  for (;;) {
    auto child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<std::int64_t>(i);
}

std::uint32_t CdclSolver::heap_pop() {
  auto top = heap_.front();
  heap_pos_[top] = -1;
  auto last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

CdclSolver::Result CdclSolver::solve() {
  model_.clear();
  if (!ok_) return Result::Unsat;
  backtrack(0);
  if (propagate() != kNoReason) {
    ok_ = false;
    return Result::Unsat;
  }

  std::uint64_t conflicts_here = 0;
  std::uint64_t since_restart = 0;
  std::uint64_t restarts = 0;
  std::uint64_t restart_limit = kRestartBase * luby(0);
  std::vector<Lit> learnt;

  for (;;) {
    auto conflict = propagate();
    if (conflict != kNoReason) {
      ++conflicts_;
      ++conflicts_here;
      ++since_restart;
      if (decision_level() == 0) {
        ok_ = false;
        return Result::Unsat;
      }
      std::uint32_t level = 0;
      analyze(conflict, learnt, level);
      backtrack(level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        auto cr = attach(learnt, true);
        enqueue(learnt[0], cr);
      }
      var_inc_ /= kVarDecay;
      continue;
    }
    if (budget_ && conflicts_here >= *budget_) {
      backtrack(0);
      return Result::Unknown;
    }
    if (since_restart >= restart_limit) {
      backtrack(0);
      since_restart = 0;
      restart_limit = kRestartBase * luby(++restarts);
      continue;
    }
    auto next = pick_branch();
    if (!next) {
      model_.resize(assigns_.size());
      for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = static_cast<std::uint8_t>(assigns_[v] == 1);
      backtrack(0);
      return Result::Sat;
    }
    ++decisions_;
    trail_lim_.push_back(trail_.size());
    enqueue(*next, kNoReason);
  }
}

std::optional<Model> sat_solve(const CnfFormula& cnf, const SolveOptions& options) {
  CdclSolver solver(cnf.variable_count());
  solver.set_conflict_budget(options.conflict_budget);
  for (const auto& clause : cnf.clauses())
    if (!solver.add_clause(clause)) return std::nullopt;
  switch (solver.solve()) {
    case CdclSolver::Result::Unsat: return std::nullopt;
    case CdclSolver::Result::Unknown:
      throw ResourceLimit("SAT conflict budget of " + std::to_string(*options.conflict_budget) + " exhausted");
    case CdclSolver::Result::Sat: break;
  }
  Model model(solver.model());
  if (!model.satisfies(cnf)) throw std::logic_error("solver returned a model that violates the formula");
  return model;
}

}  // namespace qdiag
