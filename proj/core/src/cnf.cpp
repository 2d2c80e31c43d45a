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

#include "qdiag/cnf.hpp"

#include <sstream>
#include <stdexcept>

#include "qdiag/error.hpp"

namespace qdiag {

int CnfFormula::add_variable(std::string name) {
  auto id = static_cast<int>(names_.size()) + 1;
  if (!ids_.emplace(name, id).second) throw std::invalid_argument("variable '" + name + "' registered twice");
  names_.push_back(std::move(name));
  return id;
}

int CnfFormula::variable(std::string_view name) const {
  auto id = find(name);
  if (!id) throw AssignmentError("unknown variable '" + std::string(name) + "'");
  return *id;
}

std::optional<int> CnfFormula::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void CnfFormula::add_clause(std::vector<int> literals) {
  if (literals.empty()) throw std::invalid_argument("empty clause");
  for (auto lit : literals) {
    if (lit == 0) throw std::invalid_argument("literal 0 in clause");
    auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
    if (var > names_.size()) throw std::invalid_argument("literal " + std::to_string(lit) + " is unregistered");
  }
  clauses_.push_back(std::move(literals));
}

bool Model::satisfies(const CnfFormula& f) const {
  if (values_.size() < f.variable_count()) return false;
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (auto lit : clause) sat = sat || satisfies(lit);
    if (!sat) return false;
  }
  return true;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  for (std::size_t v = 1; v <= f.variable_count(); ++v) out << "c var " << v << ' ' << f.name(static_cast<int>(v)) << '\n';
  out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
  for (const auto& clause : f.clauses()) {
    for (auto lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace qdiag
