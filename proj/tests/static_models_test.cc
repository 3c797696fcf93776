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

#include <gtest/gtest.h>

#include "robustflow/errors.h"
#include "robustflow/instances.h"
#include "robustflow/max_flow.h"
#include "robustflow/static_models.h"
#include "robustflow/suites.h"

namespace robustflow {
namespace {

Rational Value(const Network& net, StaticModel model, int gamma,
               const StaticSolveOptions& options = {}) {
  const PathCatalog catalog(net);
  return SolveStatic(net, catalog, model, gamma, options).objective;
}

std::vector<Network> SmallDags() {
  std::vector<Network> out;
  for (const DynamicInstance& inst : RandomDagCorpus(8, {5, 6}, 3, 50, 1)) {
    out.push_back(inst.network);
  }
  return out;
}

TEST(StaticModelsTest, FigureOneOptima) {
  const Network net = GenFig1();
  EXPECT_EQ(Value(net, StaticModel::kPath, 1), Rational(3, 2));
  EXPECT_EQ(Value(net, StaticModel::kArc, 1), Rational(4, 3));
  EXPECT_EQ(Value(net, StaticModel::kGeneral, 1), 2);
  EXPECT_EQ(Value(net, StaticModel::kCompactGammaOne, 1), 2);
}

TEST(StaticModelsTest, ZeroBudgetGivesNominalMaxFlow) {
  for (const Network& net : SmallDags()) {
    const Rational fstar = NominalMaxFlow(net).value;
    EXPECT_EQ(Value(net, StaticModel::kPath, 0), fstar);
    EXPECT_EQ(Value(net, StaticModel::kArc, 0), fstar);
    EXPECT_EQ(Value(net, StaticModel::kGeneral, 0), fstar);
  }
}

TEST(StaticModelsTest, RestrictedScenariosMatchFullEnumeration) {
  for (const Network& net : SmallDags()) {
    for (int gamma : {1, 2}) {
      StaticSolveOptions full;
      full.model.full_scenarios = true;
      for (StaticModel model : {StaticModel::kPath, StaticModel::kArc, StaticModel::kGeneral}) {
        EXPECT_EQ(Value(net, model, gamma), Value(net, model, gamma, full))
            << StaticModelName(model) << " gamma " << gamma;
      }
    }
  }
}

TEST(StaticModelsTest, ExactTableauAgreesWithCertifiedBasis) {
  for (const Network& net : SmallDags()) {
    StaticSolveOptions exact;
    exact.lp.method = lp::Method::kExactTableau;
    EXPECT_EQ(Value(net, StaticModel::kGeneral, 2), Value(net, StaticModel::kGeneral, 2, exact));
  }
}

TEST(StaticModelsTest, SolutionsReevaluateToTheirObjective) {
  for (const Network& net : SmallDags()) {
    const PathCatalog catalog(net);
    for (StaticModel model : {StaticModel::kPath, StaticModel::kArc, StaticModel::kGeneral,
                              StaticModel::kCompactGammaOne}) {
      const StaticResult r = SolveStatic(net, catalog, model, 1);
      EXPECT_TRUE(r.report.feasible()) << StaticModelName(model);
      EXPECT_EQ(r.report.robust_value, r.objective) << StaticModelName(model);
    }
  }
}

TEST(StaticModelsTest, EvaluatesHandWrittenPathFlow) {
  const Network net = GenFig1();
  const PathCatalog catalog(net);
  // Half a unit on each of the three paths through the first s-v arc.
  StaticFlow flow;
  flow.kind = FlowKind::kPath;
  for (size_t i = 0; i < catalog.st_paths().size(); ++i) {
    if (catalog.st_paths()[i].arcs.front() == 0) flow.values[i] = Rational(1, 2);
  }
  const RobustReport report = EvaluateStatic(net, catalog, flow, 1);
  EXPECT_TRUE(report.feasible());
  EXPECT_EQ(report.nominal_value, Rational(3, 2));
  EXPECT_EQ(report.robust_value, 0);
  ASSERT_FALSE(report.worst_scenarios.empty());
  EXPECT_EQ(report.worst_scenarios.front().arcs, std::vector<int>{0});
}

TEST(StaticModelsTest, EvaluationFlagsCapacityViolations) {
  const Network net = GenFig1();
  const PathCatalog catalog(net);
  StaticFlow flow;
  flow.kind = FlowKind::kArc;
  flow.values[0] = 5;
  const RobustReport report = EvaluateStatic(net, catalog, flow, 1);
  EXPECT_FALSE(report.feasible());
}

TEST(StaticModelsTest, RejectsNegativeBudget) {
  const Network net = GenFig1();
  const PathCatalog catalog(net);
  EXPECT_THROW(SolveStatic(net, catalog, StaticModel::kGeneral, -1), Error);
}

TEST(StaticModelsTest, CompactModelRequiresUnitBudget) {
  const Network net = GenFig1();
  const PathCatalog catalog(net);
  EXPECT_THROW(SolveStatic(net, catalog, StaticModel::kCompactGammaOne, 2), Error);
}

TEST(StaticModelsTest, LexicographicSolveKeepsRobustValue) {
  const PorStaticInstance por = GenPorStatic(2, Rational(6, 5));
  const PathCatalog catalog(por.scaled);
  StaticSolveOptions lex;
  lex.maximize_nominal = true;
  const StaticResult plain = SolveStatic(por.scaled, catalog, StaticModel::kGeneral, 2);
  const StaticResult best = SolveStatic(por.scaled, catalog, StaticModel::kGeneral, 2, lex);
  EXPECT_EQ(plain.objective, best.objective);
  EXPECT_GE(best.report.nominal_value, plain.report.nominal_value);
}

}  // namespace
}  // namespace robustflow
