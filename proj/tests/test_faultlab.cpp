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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qdiag/error.hpp"
#include "qdiag/faultlab.hpp"
#include "qdiag/generators.hpp"

namespace qdiag {
namespace {

Assignment with_faults(const FaultCircuit& fc, const Assignment& alpha, const std::set<std::string>& on) {
  Assignment in = alpha;
  for (const auto& f : fc.fault_inputs) in[f] = on.count(f) > 0;
  return in;
}

TEST(Faultlab, FullAdderAugmentation) {
  const auto c = generate_benchmark(Family::RippleAdder, 1);
  const auto fc = augment_stuck_at_1(c);
  EXPECT_EQ(fc.fault_inputs,
            (std::vector<std::string>{"z1_sa1", "z2_sa1", "z3_sa1", "sigma_sa1", "co_sa1"}));
  EXPECT_EQ(fc.circuit.gates().size(), 10U);
  EXPECT_EQ(fc.circuit.outputs(), c.outputs());
  EXPECT_EQ(fc.observed_inputs(), c.inputs());
  EXPECT_EQ(fc.origin.at("z3_sa1"), "z3");
  EXPECT_EQ(fc.circuit.inputs().size(), 8U);
}

TEST(Faultlab, NominalEquivalenceAndForcing) {
  for (auto family : kAllFamilies) {
    const auto c = generate_benchmark(family, 2);
    const auto fc = augment_stuck_at_1(c);
    EXPECT_EQ(fc.circuit.gates().size(), 2 * c.gates().size());
    const auto n = std::min<std::size_t>(c.inputs().size(), 8);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      Assignment alpha;
      for (std::size_t k = 0; k < c.inputs().size(); ++k) alpha[c.inputs()[k]] = (bits >> (k % n)) & 1U;
      const auto nominal = evaluate(c, alpha);
      const auto healthy = evaluate(fc.circuit, with_faults(fc, alpha, {}));
      for (const auto& y : c.outputs()) ASSERT_EQ(healthy.at(y), nominal.at(y));
      // Forcing one fault drives its wire to 1.
      const auto& f = fc.fault_inputs[bits % fc.fault_inputs.size()];
      const auto forced = evaluate(fc.circuit, with_faults(fc, alpha, {f}));
      ASSERT_TRUE(forced.at(fc.origin.at(f)));
    }
  }
}

TEST(Faultlab, RunningExampleObservation) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const Assignment alpha{{"i1", false}, {"i2", false}, {"ci", true}};
  // healthy: sigma = 1, co = 0
  Assignment gamma;
  for (const auto& f : fc.fault_inputs) gamma[f] = false;
  EXPECT_EQ(inject_and_observe(fc, alpha, gamma), (Assignment{{"co", false}, {"sigma", true}}));
  gamma["co_sa1"] = true;
  EXPECT_EQ(inject_and_observe(fc, alpha, gamma), (Assignment{{"co", true}, {"sigma", true}}));
  gamma["co_sa1"] = false;
  gamma["z3_sa1"] = true;
  EXPECT_EQ(inject_and_observe(fc, alpha, gamma), (Assignment{{"co", true}, {"sigma", true}}));
}

TEST(Faultlab, InjectRejectsBadDomains) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const Assignment alpha{{"i1", false}, {"i2", false}, {"ci", true}};
  EXPECT_THROW(inject_and_observe(fc, alpha, {{"z1_sa1", true}}), AssignmentError);
  EXPECT_THROW(inject_and_observe(fc, {{"i1", false}}, {}), AssignmentError);
}

TEST(Faultlab, DesignatedAssumables) {
  const auto c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  const auto fc = designate_assumables(c, {"i"});
  EXPECT_EQ(fc.fault_inputs, (std::vector<std::string>{"i"}));
  EXPECT_TRUE(fc.observed_inputs().empty());
  EXPECT_EQ(fc.circuit, c);
  EXPECT_THROW(designate_assumables(c, {"o"}), Error);
}

TEST(Faultlab, ScenariosAreReproducibleAndConsistent) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 2));
  const auto a = random_scenarios(fc, 25, 3, 99);
  const auto b = random_scenarios(fc, 25, 3, 99);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, random_scenarios(fc, 25, 3, 100));
  // Prefix stability: scenario i depends only on (seed, i).
  const auto prefix = random_scenarios(fc, 5, 3, 99);
  for (std::size_t i = 0; i < prefix.size(); ++i) EXPECT_EQ(prefix[i], a[i]);
  for (const auto& s : a) {
    std::size_t card = 0;
    for (const auto& [f, v] : s.gamma) card += v;
    EXPECT_GE(card, 1U);
    EXPECT_LE(card, 3U);
    EXPECT_EQ(s.alpha.size(), fc.observed_inputs().size());
    EXPECT_EQ(inject_and_observe(fc, s.alpha, s.gamma), s.beta);
    // The injected gamma is one of the diagnoses.
    EXPECT_GE(oracle::brute_diagnose(fc, s.alpha, s.beta).d, 1U);
  }
}

}  // namespace
}  // namespace qdiag
