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

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qdiag/cdcl.hpp"
#include "qdiag/cnf.hpp"
#include "qdiag/error.hpp"
#include "qdiag/generators.hpp"
#include "qdiag/satdiag.hpp"

namespace qdiag {
namespace {

std::set<std::vector<int>> clause_set(const CnfFormula& f) {
  std::set<std::vector<int>> s;
  for (auto cl : f.clauses()) {
    std::sort(cl.begin(), cl.end());
    s.insert(cl);
  }
  return s;
}

// CDCL solver.

bool brute_sat(int n, const std::vector<std::vector<int>>& clauses) {
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool ok = std::all_of(clauses.begin(), clauses.end(), [&](const auto& cl) {
      return std::any_of(cl.begin(), cl.end(), [&](int l) {
        const bool v = (m >> (std::abs(l) - 1)) & 1U;
        return l > 0 ? v : !v;
      });
    });
    if (ok) return true;
  }
  return false;
}

TEST(Cdcl, UnitAndContradiction) {
  CdclSolver s(2);
  const int a[] = {1}, b[] = {-1, 2};
  EXPECT_TRUE(s.add_clause(a));
  EXPECT_TRUE(s.add_clause(b));
  ASSERT_EQ(s.solve(), CdclSolver::Result::Sat);
  EXPECT_EQ(s.model()[0], 1);
  EXPECT_EQ(s.model()[1], 1);
  const int c[] = {-2};
  s.add_clause(c);
  EXPECT_EQ(s.solve(), CdclSolver::Result::Unsat);
}

TEST(Cdcl, EmptyClauseIsUnsat) {
  CdclSolver s(1);
  EXPECT_FALSE(s.add_clause(std::span<const int>{}));
  EXPECT_EQ(s.solve(), CdclSolver::Result::Unsat);
}

TEST(CdclProperty, RandomThreeSatMatchesBruteForce) {
  std::mt19937_64 rng(5);
  int sat = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(n * (3.0 + (rng() % 30) / 10.0));
    CnfFormula f;
    for (int v = 0; v < n; ++v) f.add_variable("x" + std::to_string(v));
    for (int k = 0; k < m; ++k) {
      std::vector<int> cl;
      for (int j = 0; j < 3; ++j) {
        const int v = 1 + static_cast<int>(rng() % n);
        cl.push_back(rng() % 2 ? v : -v);
      }
      f.add_clause(cl);
    }
    const bool expect = brute_sat(n, f.clauses());
    const auto model = sat_solve(f);
    ASSERT_EQ(model.has_value(), expect) << "instance " << t;
    if (model) {
      ASSERT_TRUE(model->satisfies(f));
      ++sat;
    }
  }
  EXPECT_GT(sat, 30);
  EXPECT_LT(sat, 270);
}

TEST(Cdcl, PigeonholeIsUnsatAndBudgetIsEnforced) {
  // 6 pigeons, 5 holes.
  CnfFormula f;
  auto p = [&](int i, int j) { return f.variable("p" + std::to_string(i) + "_" + std::to_string(j)); };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 5; ++j) f.add_variable("p" + std::to_string(i) + "_" + std::to_string(j));
  for (int i = 0; i < 6; ++i) {
    std::vector<int> cl;
    for (int j = 0; j < 5; ++j) cl.push_back(p(i, j));
    f.add_clause(cl);
  }
  for (int j = 0; j < 5; ++j)
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) f.add_clause({-p(a, j), -p(b, j)});
  EXPECT_FALSE(sat_solve(f).has_value());
  EXPECT_THROW(sat_solve(f, SolveOptions{1}), ResourceLimit);
}

// Encoding.

TEST(SatDiag, AndGateClauses) {
  const auto c = parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)\n");
  const auto fc = designate_assumables(c, {});
  const auto cnf = to_cnf(fc, {{"a", true}, {"b", false}}, {{"y", false}});
  const int a = cnf.variable("a"), b = cnf.variable("b"), y = cnf.variable("y");
  CnfFormula expect;
  for (const char* v : {"a", "b", "y"}) expect.add_variable(v);
  for (const auto& cl : std::vector<std::vector<int>>{{-y, a}, {-y, b}, {-a, -b, y}, {a}, {-b}, {-y}})
    expect.add_clause(cl);
  EXPECT_EQ(clause_set(cnf), clause_set(expect));
}

TEST(SatDiag, TseitinClauseCounts) {
  const auto c = parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(n)\nOUTPUT(o)\nOUTPUT(x)\nn = NOT(a)\no = OR(a, b)\nx = XOR(a, b)\n");
  const auto fc = designate_assumables(c, {"a", "b"});
  const auto cnf = to_cnf(fc, {}, {{"n", true}, {"o", true}, {"x", true}});
  EXPECT_EQ(cnf.clauses().size(), 2U + 3U + 4U + 3U);
}

TEST(SatDiag, ObservationMustMatchPorts) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  EXPECT_THROW(to_cnf(fc, {{"i1", false}}, {{"sigma", true}, {"co", true}}), AssignmentError);
  EXPECT_THROW(to_cnf(fc, {{"i1", false}, {"i2", false}, {"ci", true}}, {{"sigma", true}}), AssignmentError);
}

TEST(SatDiag, DimacsExport) {
  const auto c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  const auto text = to_dimacs(to_cnf(designate_assumables(c, {"i"}), {}, {{"o", true}}));
  EXPECT_NE(text.find("p cnf 2 3\n"), std::string::npos) << text;
  EXPECT_NE(text.find("c var 1 i\n"), std::string::npos) << text;
  EXPECT_LT(text.find("c var 1 i"), text.find("p cnf"));
}

// Diagnosis enumeration.

TEST(SatDiag, InverterDiagnoses) {
  const auto c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  const auto fc = designate_assumables(c, {"i"});
  const auto d = circuit_health_sat(fc, {}, {{"o", true}});
  EXPECT_EQ(d.diagnoses(), 1U);
  EXPECT_EQ(d.probability("i"), (Rational{0, 1}));

  const auto aug = augment_stuck_at_1(parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n"));
  const auto d2 = circuit_health_sat(aug, {{"i", true}}, {{"o", true}});
  EXPECT_EQ(d2.diagnoses(), 1U);
  EXPECT_EQ(d2.probability("o_sa1"), (Rational{1, 1}));
  const auto d1 = circuit_health_sat(aug, {{"i", false}}, {{"o", true}});
  EXPECT_EQ(d1.diagnoses(), 2U);
  EXPECT_EQ(d1.probability("o_sa1"), (Rational{1, 2}));
  const auto d0 = circuit_health_sat(aug, {{"i", false}}, {{"o", false}});
  EXPECT_EQ(d0.diagnoses(), 0U);
  EXPECT_FALSE(d0.consistent());
  EXPECT_THROW(d0.probability("o_sa1"), InconsistentObservation);
}

TEST(SatDiag, FullAdderDiagnoses) {
  const auto fc = augment_stuck_at_1(generate_benchmark(Family::RippleAdder, 1));
  const Assignment alpha{{"i1", false}, {"i2", false}, {"ci", true}};
  const Assignment beta{{"sigma", true}, {"co", true}};
  std::set<Assignment> seen;
  const auto d = circuit_health_sat(fc, alpha, beta, {}, [&](const Assignment& g) { seen.insert(g); });
  ASSERT_EQ(d.diagnoses(), 22U);
  EXPECT_EQ(seen.size(), 22U);
  const std::uint64_t expect[] = {12, 8, 12, 15, 12};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(d.probability(fc.fault_inputs[k]), (Rational{expect[k], 22}));
}

TEST(SatDiag, NoFaultsGivesSingleDiagnosis) {
  const auto c = parse_bench("INPUT(i)\nOUTPUT(o)\no = NOT(i)\n");
  const auto fc = designate_assumables(c, {});
  EXPECT_EQ(circuit_health_sat(fc, {{"i", false}}, {{"o", true}}).diagnoses(), 1U);
  EXPECT_EQ(circuit_health_sat(fc, {{"i", false}}, {{"o", false}}).diagnoses(), 0U);
}

TEST(SatDiagProperty, ProjectionSoundnessAgainstTruthTable) {
  // Every family at a width with |F| <= 12, several scenarios each.
  struct Case {
    Family f;
    int w;
  };
  const Case cases[] = {{Family::RippleAdder, 1},  {Family::RippleAdder, 2},      {Family::RippleSubtractor, 1},
                        {Family::Multiplexer, 1},  {Family::Multiplexer, 2},      {Family::Demultiplexer, 2},
                        {Family::Comparator, 1},   {Family::BarrelShifter, 2},    {Family::Multiplier, 2},
                        {Family::MultioperandAdder, 1}};
  for (const auto& cs : cases) {
    const auto fc = augment_stuck_at_1(generate_benchmark(cs.f, cs.w));
    ASSERT_LE(fc.fault_inputs.size(), 13U);
    for (const auto& s : random_scenarios(fc, 6, 3, 17)) {
      std::set<Assignment> seen;
      const auto d = circuit_health_sat(fc, s.alpha, s.beta, {}, [&](const Assignment& g) {
        // Each reported diagnosis reproduces beta and is reported once.
        EXPECT_EQ(inject_and_observe(fc, s.alpha, g), s.beta);
        EXPECT_TRUE(seen.insert(g).second);
      });
      const auto brute = oracle::brute_diagnose(fc, s.alpha, s.beta);
      ASSERT_EQ(d.diagnoses(), brute.d) << to_string(cs.f) << cs.w;
      for (std::size_t k = 0; k < fc.fault_inputs.size(); ++k)
        ASSERT_EQ(d.counts()[k], brute.count.at(fc.fault_inputs[k]));
    }
  }
}

TEST(SatDiag, RationalEquality) {
  EXPECT_EQ((Rational{12, 22}), (Rational{6, 11}));
  EXPECT_FALSE((Rational{1, 2}) == (Rational{1, 3}));
  EXPECT_DOUBLE_EQ((Rational{15, 22}).value(), 15.0 / 22.0);
}

}  // namespace
}  // namespace qdiag
