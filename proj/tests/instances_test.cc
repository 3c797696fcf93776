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
#include "robustflow/json_io.h"
#include "robustflow/max_flow.h"
#include "robustflow/static_models.h"

namespace robustflow {
namespace {

TEST(InstancesTest, FixedFamiliesAreValid) {
  EXPECT_TRUE(ValidateNetwork(GenFig1()).ok());
  for (int g = 1; g <= 3; ++g) {
    EXPECT_TRUE(ValidateNetwork(GenFan(g)).ok());
    EXPECT_EQ(GenFan(g).num_arcs(), 2 * (g + 1));
    for (int beta = 1; beta <= 3; ++beta) {
      const Network net = GenBottleneck(g, beta);
      EXPECT_TRUE(ValidateNetwork(net).ok());
      EXPECT_EQ(NominalMaxFlow(net).value, beta * (g * g + g));
    }
  }
  EXPECT_THROW(GenFan(0), Error);
  EXPECT_THROW(GenBottleneck(1, 0), Error);
}

TEST(InstancesTest, PartitionHorizonAndShape) {
  const DynamicInstance a = GenPartition({1, 2, 3});
  EXPECT_EQ(a.horizon, 58);
  EXPECT_EQ(a.gamma, 1);
  EXPECT_EQ(a.network.num_arcs(), 6);
  for (const Arc& arc : a.network.arcs()) {
    EXPECT_EQ(arc.capacity, 1);
    EXPECT_EQ(arc.delay, 58);
  }
  EXPECT_EQ(GenPartition({1, 1}).horizon, 6);
  EXPECT_THROW(GenPartition({1, 2}), Error);
  const DynamicInstance wide = GenPartition({1, 1}, 3);
  EXPECT_EQ(wide.gamma, 3);
  EXPECT_EQ(wide.network.num_arcs(), 6);
}

TEST(InstancesTest, BruteForcePartition) {
  EXPECT_TRUE(BruteForcePartition({1, 2, 3}));
  EXPECT_FALSE(BruteForcePartition({1, 1, 4}));
  EXPECT_TRUE(BruteForcePartition({2, 2}));
  EXPECT_FALSE(BruteForcePartition({2, 2, 2}));
}

TEST(InstancesTest, SplitCapacitiesCounts) {
  NetworkBuilder b;
  b.SetSource("s");
  b.SetSink("t");
  b.AddArc("a", "s", "t", 3);
  const Network split = SplitCapacities(b.Build());
  EXPECT_EQ(split.num_nodes(), 3);
  EXPECT_EQ(split.num_arcs(), 4);
  EXPECT_TRUE(ValidateNetwork(split).ok());

  NetworkBuilder fractional;
  fractional.SetSource("s");
  fractional.SetSink("t");
  fractional.AddArc("a", "s", "t", Rational(1, 2));
  EXPECT_THROW(SplitCapacities(fractional.Build()), Error);
}

TEST(InstancesTest, PriceOfRobustnessInstancesScaleToIntegers) {
  const PorStaticInstance s = GenPorStatic(2, Rational(6, 5));
  for (const Arc& arc : s.scaled.arcs()) EXPECT_TRUE(IsIntegral(arc.capacity));
  EXPECT_THROW(GenPorStatic(2, Rational(3)), Error);

  const PorDynamicInstance d = GenPorDynamic(1, Rational(3, 2));
  EXPECT_EQ(d.eta, Rational(1, 6));
  EXPECT_EQ(d.scale, 6);
  EXPECT_EQ(d.scaled.horizon, 6);
  EXPECT_THROW(GenPorDynamic(1, Rational(2)), Error);
}

TEST(InstancesTest, RandomInstancesAreDeterministicAndValid) {
  for (RandomKind kind : {RandomKind::kDag, RandomKind::kGeneral, RandomKind::kDynamic}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      RandomParams p;
      p.kind = kind;
      p.nodes = 6;
      p.arcs = 10;
      p.seed = seed;
      const DynamicInstance a = GenRandom(p);
      const DynamicInstance b = GenRandom(p);
      EXPECT_TRUE(ValidateNetwork(a.network).ok());
      EXPECT_EQ(DumpJson(InstanceToJson({a.network, a.horizon, a.gamma, nullptr})),
                DumpJson(InstanceToJson({b.network, b.horizon, b.gamma, nullptr})));
      if (kind != RandomKind::kGeneral) EXPECT_TRUE(a.network.IsDag());
    }
  }
}

TEST(InstancesTest, GenerateFamilyRecordsProvenance) {
  const InstanceFile f = GenerateFamily("bottleneck", Json{{"gamma", 2}, {"beta", 1}});
  EXPECT_EQ(f.provenance.at("family"), "bottleneck");
  EXPECT_EQ(f.gamma, 2);
  EXPECT_THROW(GenerateFamily("no-such-family", Json::object()), Error);
}

TEST(InstancesTest, InstanceJsonRoundTrip) {
  const DynamicInstance ti = GenTiExample();
  const Json json = InstanceToJson({ti.network, ti.horizon, ti.gamma, nullptr});
  const InstanceFile back = InstanceFromJson(json);
  EXPECT_EQ(DumpJson(InstanceToJson(back)), DumpJson(json));
  EXPECT_EQ(back.horizon, 2);
  EXPECT_THROW(InstanceFromJson(Json{{"nodes", Json::array()}}), Error);
}

TEST(InstancesTest, RationalJson) {
  EXPECT_EQ(RationalFromJson(Json("6/5")), Rational(6, 5));
  EXPECT_EQ(RationalFromJson(Json(3)), 3);
  EXPECT_EQ(RationalToJson(Rational(4, 2)), Json(2));
  EXPECT_EQ(RationalToJson(Rational(4, 3)), Json("4/3"));
  EXPECT_THROW(RationalFromJson(Json("1/0")), Error);
  EXPECT_THROW(RationalFromJson(Json(0.5)), Error);
}

}  // namespace
}  // namespace robustflow
