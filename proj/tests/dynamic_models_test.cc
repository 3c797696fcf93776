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

#include "robustflow/dynamic_models.h"
#include "robustflow/errors.h"
#include "robustflow/instances.h"
#include "robustflow/lp.h"
#include "robustflow/suites.h"

namespace robustflow {
namespace {

Rational Value(const DynamicInstance& inst, DynamicModel model,
               const DynamicSolveOptions& options = {}) {
  const PathCatalog catalog(inst.network);
  return SolveDynamic(inst, catalog, model, options).objective;
}

int Arc(const Network& net, const std::string& id) { return *net.FindArc(id); }

TEST(DynamicModelsTest, EntryTimesAccumulateTravelAndDelay) {
  const DynamicInstance ti = GenTiExample();
  const Network& net = ti.network;
  Path path;
  path.arcs = {Arc(net, "a1"), Arc(net, "a3")};
  path.start = net.source();
  path.end = net.sink();
  const Scenario none;
  const Scenario delayed{{Arc(net, "a1")}};
  EXPECT_EQ(EntryTimeAtArc(net, path, 1, 0, none), 0);
  EXPECT_EQ(EntryTime(net, path, 2, none), 1);
  EXPECT_EQ(PathDelay(net, path, none), 0);

  Path slow;
  slow.arcs = {Arc(net, "a1"), Arc(net, "a2")};
  slow.start = net.source();
  slow.end = net.sink();
  const Scenario a2{{Arc(net, "a2")}};
  EXPECT_EQ(EntryTime(net, slow, 3, a2), 1);
  EXPECT_EQ(PathDelay(net, slow, a2), 2);
  EXPECT_EQ(PathDelay(net, slow, delayed), 0);
  EXPECT_EQ(ArcEntryTime(net, Arc(net, "a4"), 2, Scenario{{Arc(net, "a4")}}), 0);
}

TEST(DynamicModelsTest, ExampleOptima) {
  const DynamicInstance ti = GenTiExample();
  EXPECT_EQ(Value(ti, DynamicModel::kPath), 2);
  EXPECT_EQ(Value(ti, DynamicModel::kArc), 2);
  EXPECT_EQ(Value(ti, DynamicModel::kArcCompact), 2);
  EXPECT_EQ(Value(ti, DynamicModel::kGeneral), 2);
  EXPECT_EQ(Value(ti, DynamicModel::kTemporallyRepeated), Rational(3, 2));
}

TEST(DynamicModelsTest, NominalProgramMatchesTimeExpandedMaxFlow) {
  const DynamicInstance ti = GenTiExample();
  EXPECT_EQ(NominalDynamicMaxFlow(ti), 3);
  EXPECT_EQ(lp::Solve(BuildNominalDynamicModel(ti).program).objective_value, 3);
  for (const DynamicInstance& inst : RandomDynamicCorpus(8, {4, 5}, 30)) {
    EXPECT_EQ(lp::Solve(BuildNominalDynamicModel(inst).program).objective_value,
              NominalDynamicMaxFlow(inst));
  }
}

TEST(DynamicModelsTest, RestrictedScenariosMatchFullEnumeration) {
  for (const DynamicInstance& inst : RandomDynamicCorpus(6, {4, 5}, 40)) {
    DynamicSolveOptions full;
    full.model.full_scenarios = true;
    for (DynamicModel model : {DynamicModel::kPath, DynamicModel::kArc, DynamicModel::kGeneral,
                               DynamicModel::kTemporallyRepeated}) {
      EXPECT_EQ(Value(inst, model), Value(inst, model, full)) << DynamicModelName(model);
    }
  }
}

TEST(DynamicModelsTest, TemporallyRepeatedExpansionRepeatsEveryStep) {
  const DynamicInstance ti = GenTiExample();
  const PathCatalog catalog(ti.network);
  const DynamicResult tr = SolveDynamic(ti, catalog, DynamicModel::kTemporallyRepeated);
  const DynamicFlow expanded = ExpandTemporallyRepeated(tr.flow, ti.horizon);
  Rational per_step = 0;
  for (const auto& [key, value] : tr.flow.values) per_step += value;
  Rational total = 0;
  for (const auto& [key, value] : expanded.values) total += value;
  EXPECT_EQ(total, per_step * ti.horizon);
  const DynamicRobustReport report = EvaluateDynamic(ti, catalog, expanded);
  EXPECT_TRUE(report.feasible());
  EXPECT_EQ(report.robust_value, Rational(3, 2));
}

TEST(DynamicModelsTest, EarliestArrivalOfExampleOptimum) {
  const DynamicInstance ti = GenTiExample();
  const PathCatalog catalog(ti.network);
  const DynamicResult r = SolveDynamic(ti, catalog, DynamicModel::kPath);
  EXPECT_EQ(r.report.robust_value, 2);
  ASSERT_TRUE(r.report.earliest_arrival.has_value());
  EXPECT_LE(*r.report.earliest_arrival, ti.horizon);
}

TEST(DynamicModelsTest, EvaluationFlagsLateOrOverCapacityFlow) {
  const DynamicInstance ti = GenTiExample();
  const PathCatalog catalog(ti.network);
  DynamicFlow flow;
  flow.kind = FlowKind::kArc;
  flow.values[{Arc(ti.network, "a4"), 1}] = 2;
  EXPECT_FALSE(EvaluateDynamic(ti, catalog, flow).feasible());
}

TEST(DynamicModelsTest, EmbeddingReproducesStaticOptima) {
  const Network net = GenFig1();
  const DynamicInstance embedded = EmbedStatic(net, 1);
  EXPECT_EQ(embedded.horizon, 1);
  EXPECT_EQ(Value(embedded, DynamicModel::kPath), Rational(3, 2));
  EXPECT_EQ(Value(embedded, DynamicModel::kArc), Rational(4, 3));
  EXPECT_EQ(Value(embedded, DynamicModel::kGeneral), 2);
}

TEST(DynamicModelsTest, ZeroBudgetGivesNominalOptimum) {
  for (DynamicInstance inst : RandomDynamicCorpus(6, {4, 5}, 60)) {
    inst.gamma = 0;
    const Rational fstar = NominalDynamicMaxFlow(inst);
    EXPECT_EQ(Value(inst, DynamicModel::kPath), fstar);
    EXPECT_EQ(Value(inst, DynamicModel::kArc), fstar);
    EXPECT_EQ(Value(inst, DynamicModel::kGeneral), fstar);
  }
}

TEST(DynamicModelsTest, RejectsNonpositiveHorizon) {
  DynamicInstance ti = GenTiExample();
  ti.horizon = 0;
  const PathCatalog catalog(ti.network);
  EXPECT_THROW(SolveDynamic(ti, catalog, DynamicModel::kPath), Error);
}

}  // namespace
}  // namespace robustflow
