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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qdiag {

/// Clause set over named variables. Literals are DIMACS-style nonzero
/// integers: `v` for the variable with id v, `-v` for its negation.
class CnfFormula {
 public:
  /// Registers a new variable and returns its id (1-based). Throws on duplicates.
  int add_variable(std::string name);
  /// Id of a registered variable; throws AssignmentError if unknown.
  int variable(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;
  const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var - 1)); }
  std::size_t variable_count() const noexcept { return names_.size(); }

  /// Throws std::invalid_argument on an empty clause, literal 0 or an unregistered variable.
  void add_clause(std::vector<int> literals);
  const std::vector<std::vector<int>>& clauses() const noexcept { return clauses_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::vector<int>> clauses_;
};

/// Total assignment; `value(v)` for variable ids 1..n.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<std::uint8_t> values) : values_(std::move(values)) {}

  bool value(int var) const { return values_.at(static_cast<std::size_t>(var - 1)) != 0; }
  bool satisfies(int literal) const { return literal > 0 ? value(literal) : !value(-literal); }
  bool satisfies(const CnfFormula& f) const;
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<std::uint8_t> values_;
};

/// DIMACS CNF text: one `c var <id> <name>` comment per variable, the
/// `p cnf V C` header, then clause lines terminated by 0.
std::string to_dimacs(const CnfFormula& f);

}  // namespace qdiag
