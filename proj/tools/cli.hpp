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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdiag::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kUsage = 2,
  kInconsistent = 3,
  kResourceLimit = 4,
};

/// Parsed command line. Exactly one subcommand is set.
struct RunConfig {
  std::string subcommand;
  std::string netlist;  ///< path or "-" for standard input
  std::string circuit;  ///< experiment --circuit: alias (adder2), family:width or path
  std::string family;
  int width = 0;
  std::vector<std::string> families;
  std::vector<int> widths;
  std::string alpha;
  std::string beta;
  std::string assume;  ///< comma list of primary inputs treated as unknowns
  std::string engine = "sat";
  std::string mode = "exact";
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
  std::uint64_t scenario_seed = 1;
  std::size_t scenarios = 10;
  std::size_t max_cardinality = 2;
  std::size_t repeats = 11;
  std::string schedule = "6-16";
  bool include_exact = false;
  std::string kind;
  std::string what;
  std::string backend = "auto";
  std::size_t qubit_cap = 26;
  std::size_t max_superposition = 20;
  std::string out = "-";
  std::string format = "json";
  bool pretty = false;
  bool timing = true;
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qdiag::cli
