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
#include "robustflow/network.h"
#include "robustflow/paths.h"
#include "robustflow/suites.h"

namespace robustflow {
namespace {

bool HasViolation(const Network& net, const std::string& kind) {
  for (const Violation& v : ValidateNetwork(net).violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

TEST(NetworkTest, BuilderIndexesArcsAndNodes) {
  NetworkBuilder b;
  b.SetSource("s");
  b.SetSink("t");
  b.AddArc("a1", "s", "v", 2);
  b.AddArc("a2", "v", "t", Rational(1, 2), 3, 4);
  const Network net = b.Build();
  EXPECT_EQ(net.num_nodes(), 3);
  EXPECT_EQ(net.num_arcs(), 2);
  EXPECT_EQ(net.arc(*net.FindArc("a2")).capacity, Rational(1, 2));
  EXPECT_EQ(net.arc(*net.FindArc("a2")).delay, 4);
  EXPECT_FALSE(net.FindArc("a3").has_value());
  EXPECT_EQ(net.out_arcs(*net.FindNode("v")).size(), 1u);
  EXPECT_TRUE(net.IsDag());
  EXPECT_EQ(net.MaxCapacity(), 2);
  EXPECT_TRUE(ValidateNetwork(net).ok());
}

TEST(NetworkTest, ValidationReportsStructuralDefects) {
  NetworkBuilder b;
  b.SetSource("s");
  b.SetSink("t");
  b.AddArc("a1", "s", "t", 1);
  b.AddArc("a2", "s", "x", 1);  // x cannot reach t
  b.AddArc("a3", "t", "s", 0);
  const Network net = b.Build();
  EXPECT_TRUE(HasViolation(net, "capacity"));
  EXPECT_TRUE(HasViolation(net, "source-indegree"));
  EXPECT_TRUE(HasViolation(net, "sink-outdegree"));
  EXPECT_THROW(RequireValid(net), Error);
}

TEST(NetworkTest, ValidationRejectsDuplicateArcIds) {
  NetworkBuilder b;
  b.SetSource("s");
  b.SetSink("t");
  b.AddArc("a", "s", "t", 1);
  b.AddArc("a", "s", "t", 1);
  EXPECT_TRUE(HasViolation(b.Build(), "duplicate-arc"));
}

TEST(PathsTest, FigureOneHasSixSourceSinkPaths) {
  const Network net = GenFig1();
  const PathCatalog catalog(net);
  EXPECT_EQ(catalog.st_paths().size(), 6u);
  // Subpaths: 6 s-t paths, 2 s-v arcs, 3 v-t arcs.
  EXPECT_EQ(catalog.subpaths().size(), 11u);
  for (size_t i = 0; i < catalog.st_paths().size(); ++i) {
    EXPECT_EQ(catalog.FindStPath(catalog.st_paths()[i].arcs), static_cast<int>(i));
  }
}

TEST(PathsTest, PathGuardIsEnforced) {
  Guards guards;
  guards.max_paths = 3;
  EXPECT_THROW(PathCatalog(GenFig1(), guards), Error);
}

TEST(PathsTest, ScenarioEnumerationMatchesCount) {
  const std::vector<int> universe = {0, 1, 2, 3, 4};
  for (int g = 0; g <= 5; ++g) {
    EXPECT_EQ(EnumerateScenarios(universe, g).size(), CountScenarios(universe.size(), g));
  }
  EXPECT_EQ(CountScenarios(5, 2), 16u);  // 1 + 5 + 10
  Guards guards;
  guards.max_scenarios = 10;
  EXPECT_THROW(EnumerateScenarios(universe, 2, guards), Error);
}

TEST(MaxFlowTest, MatchesBruteForceMinCut) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    RandomParams p;
    p.kind = seed % 2 ? RandomKind::kDag : RandomKind::kGeneral;
    p.nodes = 6;
    p.arcs = 11;
    p.max_capacity = 5;
    p.seed = seed;
    const Network net = GenRandom(p).network;
    const MaxFlowResult flow = NominalMaxFlow(net);
    EXPECT_EQ(flow.value, BruteForceMinCut(net)) << "seed " << seed;
    EXPECT_EQ(flow.value, flow.cut_capacity);
  }
}

TEST(MaxFlowTest, DecompositionCoversFlowValue) {
  const Network net = GenFig1();
  const MaxFlowResult flow = NominalMaxFlow(net);
  Rational total = 0;
  for (const WeightedPath& p :
       DecomposeFlow(net, flow.arc_flow, net.source(), net.sink())) {
    EXPECT_EQ(p.start, net.source());
    EXPECT_EQ(p.end, net.sink());
    total += p.value;
  }
  EXPECT_EQ(total, 3);
}

}  // namespace
}  // namespace robustflow
