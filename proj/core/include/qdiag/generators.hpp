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

#include <optional>
#include <span>
#include <string_view>

#include "qdiag/netlist.hpp"

namespace qdiag {

enum class Family {
  RippleAdder,
  RippleSubtractor,
  Multiplexer,
  Demultiplexer,
  Comparator,
  BarrelShifter,
  Multiplier,
  MultioperandAdder,
};

inline constexpr Family kAllFamilies[] = {
    Family::RippleAdder,   Family::RippleSubtractor, Family::Multiplexer, Family::Demultiplexer,
    Family::Comparator,    Family::BarrelShifter,    Family::Multiplier,  Family::MultioperandAdder,
};

std::string_view to_string(Family f);

/// Accepts the canonical snake_case names (`ripple_adder`, ...) and the short
/// aliases `adder`, `subtractor`, `mux`, `demux`, `comparator`, `shifter`,
/// `multiplier`, `multiadd`.
std::optional<Family> parse_family(std::string_view name);

/// Builds an arithmetic benchmark circuit over the standard basis.
///
/// Port conventions (bit 0 is least significant):
///  - ripple_adder: a0.., b0.., cin → s0.., cout. Width 1 is the textbook full
///    adder with ports i1, i2, ci → sigma, co and internal wires z1, z2, z3.
///  - ripple_subtractor: a0.., b0.., bin → d0.., bout  (a - b - bin).
///  - multiplexer: s0..s{w-1}, d0..d{2^w-1} → y.
///  - demultiplexer: x, s0..s{w-1} → y0..y{2^w-1}.
///  - comparator: a0.., b0.. → lt, eq, gt.
///  - barrel_shifter (width a power of two ≥ 2): d0.., s0..s{log2 w - 1} → y0..
///    (rotate left by s).
///  - multiplier: a0.., b0.. → p0..p{2w-1} (only p0 for width 1).
///  - multioperand_adder: three operands a, b, c → s0.. (w + 2 bits, w + 1 for width 1).
///
/// Throws UsageError for width 0 or an unsupported width.
Circuit generate_benchmark(Family family, int width);

}  // namespace qdiag
