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
#include <stdexcept>
#include <string>

namespace qdiag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed netlist text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structural violation of a circuit invariant (duplicate driver, undeclared wire, ...).
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// The gate graph contains a cycle; `wire()` names one wire on it.
class CycleError : public CircuitError {
 public:
  explicit CycleError(std::string wire)
      : CircuitError("combinational cycle through wire '" + wire + "'"), wire_(std::move(wire)) {}

  const std::string& wire() const noexcept { return wire_; }

 private:
  std::string wire_;
};

/// An assignment is missing bindings, binds unknown wires, or has the wrong domain.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

/// No fault assignment explains the observation (diagnosis count is zero,
/// or no sampled shot had the combined output set).
class InconsistentObservation : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (qubits, superposition width, solver conflicts) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Invalid arguments to an operation (bad family/width, empty qubit subset, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdiag
