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

// Deterministic instance families, transformations and seeded sampling.
// Every generator returns a network that passes ValidateNetwork and throws
// Error(kInvalidArgument) on parameters outside the family's domain.

#ifndef ROBUSTFLOW_INSTANCES_H_
#define ROBUSTFLOW_INSTANCES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "robustflow/dynamic_models.h"
#include "robustflow/json_io.h"
#include "robustflow/network.h"
#include "robustflow/rational.h"

namespace robustflow {

// s -> v by two arcs of capacity 2, v -> t by three unit arcs.
Network GenFig1();

// gamma + 1 disjoint two-arc unit chains s -> v_i -> t.
Network GenFan(int gamma);

// gamma + 1 parallel s -> v arcs of capacity eta and eta parallel unit
// v -> t arcs, eta = beta * (gamma^2 + gamma).
Network GenBottleneck(int gamma, int beta);

// Price-of-robustness instance for the static models.
struct PorStaticInstance {
  Rational eta;
  Network rational;  // capacities 1 - eta, 1 and gamma - (gamma - 1) * eta
  Rational scale;    // lcm of the capacity denominators
  Network scaled;    // capacities multiplied by `scale`
};
// Requires gamma >= 2 and 1 <= alpha < 2 * gamma / (gamma + 1), with every
// capacity positive.
PorStaticInstance GenPorStatic(int gamma, const Rational& alpha);

// Price-of-robustness instance for the dynamic models: a chain of gamma
// gadgets, each a fast-but-delayable arc next to a slightly slower safe arc.
struct PorDynamicInstance {
  Rational eta;
  // Unscaled times, horizon 1, indexed like the arcs of `scaled.network`.
  std::vector<Rational> travel_time;
  std::vector<Rational> delay;
  Rational scale;            // lcm of the time denominators
  DynamicInstance scaled;    // integral times, horizon = scale
};
// Requires gamma >= 1 and 1 <= alpha < gamma + 1.
PorDynamicInstance GenPorDynamic(int gamma, const Rational& alpha);

// PARTITION reduction: n stages of two parallel unit arcs with travel times
// n*bmax*b_i and n*bmax*b_i + b_i, every delay equal to the horizon
// (2*n*bmax + 1) * L + 1 where 2L = sum(b). gamma is 1; with
// `extra_gamma` = k > 1 the instance gets k - 1 extra s-t arcs of capacity
// 2, travel time 0 and delay T, and gamma k.
DynamicInstance GenPartition(const std::vector<int64_t>& b, int extra_gamma = 1);

// Three nodes, four unit arcs, gamma 1, horizon 2: the robust models reach 2
// while constant-rate flows reach 3/2.
DynamicInstance GenTiExample();

// Replaces every arc a = (v, w) by v -> v_a with capacity max_a u_a followed
// by u_a parallel unit arcs v_a -> w. Requires integral capacities.
Network SplitCapacities(const Network& network);

enum class RandomKind { kDag, kGeneral, kDynamic };

struct RandomParams {
  RandomKind kind = RandomKind::kDag;
  int nodes = 6;
  int arcs = 10;
  int64_t max_capacity = 4;
  int64_t max_travel_time = 2;  // dynamic only
  int64_t max_delay = 2;        // dynamic only
  int64_t horizon = 4;          // dynamic only
  int gamma = 1;
  uint64_t seed = 0;
};

// Seeded and portable: identical parameters give identical instances on every
// platform. Static kinds have zero travel times and delays. Dynamic instances
// are acyclic.
DynamicInstance GenRandom(const RandomParams& params);

// Exhaustive subset search for sum(I) = sum(b) / 2. Requires n <= 25.
bool BruteForcePartition(const std::vector<int64_t>& b);

// Generates an instance by family name with parameters from a JSON object and
// records the family and parameters under "provenance". Families: fig1, fan,
// bottleneck, por-static, por-static-scaled, por-dynamic, partition,
// ti-example, random, split (wraps another generated family).
InstanceFile GenerateFamily(const std::string& family, const Json& params);

}  // namespace robustflow

#endif  // ROBUSTFLOW_INSTANCES_H_
