// Copyright 2026 The robustflow Authors
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

#include <random>

#include <gtest/gtest.h>

#include "robustflow/lp.h"

namespace robustflow::lp {
namespace {

TEST(LpTest, SolvesSmallMaximization) {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3.
  LinearProgram p;
  const int x = p.AddVariable("x");
  const int y = p.AddVariable("y");
  p.AddConstraint({{x, 1}, {y, 1}}, Relation::kLessEqual, 4);
  p.AddConstraint({{x, 1}, {y, 3}}, Relation::kLessEqual, 6);
  p.AddConstraint({{x, 1}}, Relation::kLessEqual, 3);
  p.SetObjective(Sense::kMaximize, {{x, 3}, {y, 2}});
  for (Method method : {Method::kCertifiedBasis, Method::kExactTableau}) {
    const Solution s = Solve(p, {method, true});
    ASSERT_EQ(s.status, Status::kOptimal);
    EXPECT_EQ(s.objective_value, 11);
    EXPECT_EQ(s.values[x], 3);
    EXPECT_EQ(s.values[y], 1);
    EXPECT_TRUE(Violations(p, s.values).empty());
  }
}

TEST(LpTest, ExactFractionsAndFreeVariables) {
  // min z  s.t.  z >= 1/3 - w, z >= w - 1/7, w free, z free.
  LinearProgram p;
  const int z = p.AddVariable("z", true);
  const int w = p.AddVariable("w", true);
  p.AddConstraint({{z, 1}, {w, 1}}, Relation::kGreaterEqual, Rational(1, 3));
  p.AddConstraint({{z, 1}, {w, -1}}, Relation::kGreaterEqual, Rational(-1, 7));
  p.SetObjective(Sense::kMinimize, {{z, 1}});
  const Solution s = Solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective_value, Rational(2, 21));
}

TEST(LpTest, DetectsInfeasibleAndUnbounded) {
  LinearProgram infeasible;
  const int x = infeasible.AddVariable("x");
  infeasible.AddConstraint({{x, 1}}, Relation::kGreaterEqual, 2);
  infeasible.AddConstraint({{x, 1}}, Relation::kLessEqual, 1);
  infeasible.SetObjective(Sense::kMaximize, {{x, 1}});
  EXPECT_EQ(Solve(infeasible).status, Status::kInfeasible);
  EXPECT_EQ(Solve(infeasible, {Method::kExactTableau, false}).status, Status::kInfeasible);

  LinearProgram unbounded;
  const int u = unbounded.AddVariable("u");
  const int v = unbounded.AddVariable("v");
  unbounded.AddConstraint({{u, 1}, {v, -1}}, Relation::kLessEqual, 1);
  unbounded.SetObjective(Sense::kMaximize, {{u, 1}});
  EXPECT_EQ(Solve(unbounded).status, Status::kUnbounded);
  EXPECT_EQ(Solve(unbounded, {Method::kExactTableau, false}).status, Status::kUnbounded);
}

TEST(LpTest, EqualityRowsAndDegeneracy) {
  // A degenerate transportation-like program.
  LinearProgram p;
  std::vector<int> v;
  for (int i = 0; i < 6; ++i) v.push_back(p.AddVariable("x" + std::to_string(i)));
  p.AddConstraint({{v[0], 1}, {v[1], 1}, {v[2], 1}}, Relation::kEqual, 2);
  p.AddConstraint({{v[3], 1}, {v[4], 1}, {v[5], 1}}, Relation::kEqual, 2);
  p.AddConstraint({{v[0], 1}, {v[3], 1}}, Relation::kLessEqual, 2);
  p.AddConstraint({{v[1], 1}, {v[4], 1}}, Relation::kLessEqual, 0);
  p.AddConstraint({{v[2], 1}, {v[5], 1}}, Relation::kLessEqual, 2);
  p.SetObjective(Sense::kMinimize, {{v[0], 1}, {v[1], 2}, {v[2], 3}, {v[3], 3}, {v[4], 2},
                                    {v[5], 1}});
  const Solution s = Solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective_value, 4);
}

// Random bounded programs: the certified and exact tableau paths agree and the
// optimum satisfies weak duality against a feasible point.
TEST(LpTest, CertifiedMatchesExactTableauOnRandomPrograms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    LinearProgram p;
    const int n = 3 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % 5);
    std::vector<int> x;
    for (int j = 0; j < n; ++j) x.push_back(p.AddVariable("x" + std::to_string(j)));
    for (int i = 0; i < m; ++i) {
      std::vector<Term> row;
      for (int j = 0; j < n; ++j) {
        const int c = static_cast<int>(rng() % 7) - 1;
        if (c != 0) row.push_back({x[j], Rational(c, 1 + static_cast<int>(rng() % 3))});
      }
      p.AddConstraint(row, trial % 3 == 0 && i == 0 ? Relation::kEqual : Relation::kLessEqual,
                      Rational(static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 2)));
    }
    for (int j = 0; j < n; ++j) p.AddConstraint({{x[j], 1}}, Relation::kLessEqual, 5);
    std::vector<Term> objective;
    for (int j = 0; j < n; ++j) {
      objective.push_back({x[j], static_cast<int>(rng() % 9) - 3});
    }
    p.SetObjective(Sense::kMaximize, objective);
    const Solution certified = Solve(p);
    const Solution exact = Solve(p, {Method::kExactTableau, false});
    ASSERT_EQ(certified.status, exact.status) << "trial " << trial;
    if (certified.status != Status::kOptimal) continue;
    EXPECT_EQ(certified.objective_value, exact.objective_value) << "trial " << trial;
    EXPECT_TRUE(Violations(p, certified.values).empty());
    EXPECT_EQ(Evaluate(p.objective(), certified.values), certified.objective_value);
  }
}

TEST(LpTest, LexicographicSolveKeepsPrimaryOptimum) {
  // max x + y with x + y <= 2; secondary max x subject to that optimum.
  LinearProgram p;
  const int x = p.AddVariable("x");
  const int y = p.AddVariable("y");
  p.AddConstraint({{x, 1}, {y, 1}}, Relation::kLessEqual, 2);
  p.AddConstraint({{x, 1}}, Relation::kLessEqual, Rational(3, 2));
  p.SetObjective(Sense::kMaximize, {{x, 1}, {y, 1}});
  const LexicographicSolution s = LexicographicSolve(p, {{x, 1}}, Sense::kMaximize);
  ASSERT_EQ(s.primary.status, Status::kOptimal);
  EXPECT_EQ(s.primary.objective_value, 2);
  EXPECT_EQ(s.secondary_value, Rational(3, 2));
  EXPECT_EQ(s.secondary.values[x] + s.secondary.values[y], 2);
}

}  // namespace
}  // namespace robustflow::lp
