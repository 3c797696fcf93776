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

#ifndef ROBUSTFLOW_MAX_FLOW_H_
#define ROBUSTFLOW_MAX_FLOW_H_

#include <vector>

#include "robustflow/network.h"
#include "robustflow/paths.h"
#include "robustflow/rational.h"

namespace robustflow {

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> arc_flow;  // indexed by arc
  // Nodes on the source side of a minimum cut.
  std::vector<bool> source_side;
  Rational cut_capacity;
};

// Exact Edmonds-Karp on a bare digraph given by tails, heads and capacities.
// Parallel arcs are fine.
MaxFlowResult MaxFlow(int num_nodes, const std::vector<int>& tails,
                      const std::vector<int>& heads,
                      const std::vector<Rational>& capacities, int source,
                      int sink);

// Static maximum source-sink flow of a network.
MaxFlowResult NominalMaxFlow(const Network& network);

struct WeightedPath {
  std::vector<int> arcs;
  int start = -1;
  int end = -1;
  Rational value;
};

// Decomposes a flow that satisfies conservation at every node except `from`
// and `to` into paths from `from` to `to`. Flow on cycles is dropped. The
// decomposition is deterministic: it always follows the lowest-index arc with
// remaining flow.
std::vector<WeightedPath> DecomposeFlow(const Network& network,
                                        std::vector<Rational> arc_flow,
                                        int from, int to);

}  // namespace robustflow

#endif  // ROBUSTFLOW_MAX_FLOW_H_
