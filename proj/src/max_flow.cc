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

#include "robustflow/max_flow.h"

#include <deque>

#include "robustflow/errors.h"

namespace robustflow {

MaxFlowResult MaxFlow(int num_nodes, const std::vector<int>& tails,
                      const std::vector<int>& heads,
                      const std::vector<Rational>& capacities, int source,
                      int sink) {
  const int m = static_cast<int>(tails.size());
  // Residual arc 2i is forward, 2i+1 is backward.
  std::vector<std::vector<int>> adjacency(num_nodes);
  for (int i = 0; i < m; ++i) {
    adjacency[tails[i]].push_back(2 * i);
    adjacency[heads[i]].push_back(2 * i + 1);
  }
  std::vector<Rational> flow(m, 0);
  auto residual = [&](int r) -> Rational {
    const int i = r / 2;
    return r % 2 == 0 ? Rational(capacities[i] - flow[i]) : flow[i];
  };
  auto endpoint = [&](int r) { return r % 2 == 0 ? heads[r / 2] : tails[r / 2]; };

  MaxFlowResult result;
  result.value = 0;
  std::vector<int> via(num_nodes);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<bool> seen(num_nodes, false);
    seen[source] = true;
    std::deque<int> queue = {source};
    while (!queue.empty() && !seen[sink]) {
      const int v = queue.front();
      queue.pop_front();
      for (int r : adjacency[v]) {
        const int w = endpoint(r);
        if (seen[w] || residual(r) <= 0) continue;
        seen[w] = true;
        via[w] = r;
        queue.push_back(w);
      }
    }
    if (!seen[sink]) {
      result.source_side = seen;
      break;
    }
    Rational bottleneck = -1;
    for (int v = sink; v != source;) {
      const int r = via[v];
      const Rational res = residual(r);
      if (bottleneck < 0 || res < bottleneck) bottleneck = res;
      v = r % 2 == 0 ? tails[r / 2] : heads[r / 2];
    }
    for (int v = sink; v != source;) {
      const int r = via[v];
      if (r % 2 == 0) {
        flow[r / 2] += bottleneck;
        v = tails[r / 2];
      } else {
        flow[r / 2] -= bottleneck;
        v = heads[r / 2];
      }
    }
    result.value += bottleneck;
  }
  result.cut_capacity = 0;
  for (int i = 0; i < m; ++i) {
    if (result.source_side[tails[i]] && !result.source_side[heads[i]]) {
      result.cut_capacity += capacities[i];
    }
  }
  result.arc_flow = std::move(flow);
  return result;
}

MaxFlowResult NominalMaxFlow(const Network& network) {
  RequireValid(network);
  std::vector<int> tails, heads;
  std::vector<Rational> caps;
  for (const Arc& arc : network.arcs()) {
    tails.push_back(arc.tail);
    heads.push_back(arc.head);
    caps.push_back(arc.capacity);
  }
  return MaxFlow(network.num_nodes(), tails, heads, caps, network.source(),
                 network.sink());
}

std::vector<WeightedPath> DecomposeFlow(const Network& network,
                                        std::vector<Rational> arc_flow,
                                        int from, int to) {
  if (static_cast<int>(arc_flow.size()) != network.num_arcs()) {
    ThrowInvalid("arc flow has the wrong length");
  }
  for (const Rational& f : arc_flow) {
    if (f < 0) ThrowInvalid("arc flow is negative");
  }
  std::vector<WeightedPath> out;
  const int n = network.num_nodes();
  auto first_positive = [&](int v) {
    for (int a : network.out_arcs(v)) {
      if (arc_flow[a] > 0) return a;
    }
    return -1;
  };
  while (true) {
    if (first_positive(from) < 0) break;
    // Walk from `from`; a repeated node closes a cycle, which is cancelled.
    std::vector<int> position(n, -1);
    std::vector<int> walk;
    int v = from;
    position[v] = 0;
    bool restart = false;
    while (v != to) {
      const int a = first_positive(v);
      if (a < 0) {
        ThrowInvalid("flow violates conservation at node '" +
                     network.node_name(v) + "'");
      }
      walk.push_back(a);
      const int w = network.arc(a).head;
      if (position[w] >= 0) {
        const std::vector<int> cycle(walk.begin() + position[w], walk.end());
        Rational amount = arc_flow[cycle.front()];
        for (int c : cycle) amount = std::min(amount, arc_flow[c]);
        for (int c : cycle) arc_flow[c] -= amount;
        restart = true;
        break;
      }
      position[w] = static_cast<int>(walk.size());
      v = w;
    }
    if (restart) continue;
    Rational amount = arc_flow[walk.front()];
    for (int a : walk) amount = std::min(amount, arc_flow[a]);
    for (int a : walk) arc_flow[a] -= amount;
    out.push_back({walk, from, to, amount});
  }
  return out;
}

}  // namespace robustflow
