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

#include "robustflow/network.h"

#include <deque>
#include <set>
#include <utility>

#include "robustflow/errors.h"

namespace robustflow {

Network::Network(std::vector<std::string> nodes, std::vector<Arc> arcs,
                 int source, int sink)
    : nodes_(std::move(nodes)),
      arcs_(std::move(arcs)),
      source_(source),
      sink_(sink),
      in_arcs_(nodes_.size()),
      out_arcs_(nodes_.size()) {
  for (int v = 0; v < num_nodes(); ++v) node_index_.emplace(nodes_[v], v);
  for (int a = 0; a < num_arcs(); ++a) {
    arcs_[a].capacity.canonicalize();
    const Arc& arc = arcs_[a];
    arc_index_.emplace(arc.id, a);
    if (arc.tail >= 0 && arc.tail < num_nodes()) out_arcs_[arc.tail].push_back(a);
    if (arc.head >= 0 && arc.head < num_nodes()) in_arcs_[arc.head].push_back(a);
  }
}

std::optional<int> Network::FindNode(const std::string& name) const {
  auto it = node_index_.find(name);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Network::FindArc(const std::string& id) const {
  auto it = arc_index_.find(id);
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

Rational Network::MaxCapacity() const {
  Rational best = 0;
  for (const Arc& arc : arcs_) {
    if (arc.capacity > best) best = arc.capacity;
  }
  return best;
}

bool Network::IsDag() const {
  // Kahn's algorithm.
  std::vector<int> indegree(num_nodes(), 0);
  for (const Arc& arc : arcs_) ++indegree[arc.head];
  std::deque<int> ready;
  for (int v = 0; v < num_nodes(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++seen;
    for (int a : out_arcs_[v]) {
      if (--indegree[arcs_[a].head] == 0) ready.push_back(arcs_[a].head);
    }
  }
  return seen == num_nodes();
}

int NetworkBuilder::AddNode(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, static_cast<int>(nodes_.size()));
  if (inserted) nodes_.push_back(name);
  return it->second;
}

int NetworkBuilder::AddArc(const std::string& id, const std::string& tail,
                           const std::string& head, const Rational& capacity,
                           int64_t travel_time, int64_t delay) {
  Arc arc;
  arc.id = id;
  arc.tail = AddNode(tail);
  arc.head = AddNode(head);
  arc.capacity = capacity;
  arc.travel_time = travel_time;
  arc.delay = delay;
  arcs_.push_back(std::move(arc));
  return static_cast<int>(arcs_.size()) - 1;
}

Network NetworkBuilder::Build() const {
  return Network(nodes_, arcs_, source_, sink_);
}

std::string ValidationReport::Summary() const {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.kind + ": " + v.message;
  }
  return out;
}

namespace {

std::vector<bool> Reach(const Network& net, int start, bool forward) {
  std::vector<bool> seen(net.num_nodes(), false);
  std::deque<int> queue = {start};
  seen[start] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const auto& arcs = forward ? net.out_arcs(v) : net.in_arcs(v);
    for (int a : arcs) {
      const int w = forward ? net.arc(a).head : net.arc(a).tail;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

ValidationReport ValidateNetwork(const Network& net) {
  ValidationReport report;
  auto add = [&report](std::string kind, std::string message) {
    report.violations.push_back({std::move(kind), std::move(message)});
  };
  const int n = net.num_nodes();
  std::set<std::string> node_names(net.nodes().begin(), net.nodes().end());
  if (static_cast<int>(node_names.size()) != n) {
    add("duplicate-node", "node names are not unique");
  }
  if (net.source() < 0 || net.source() >= n) {
    add("missing-source", "source node is not set");
  }
  if (net.sink() < 0 || net.sink() >= n) {
    add("missing-sink", "sink node is not set");
  }
  std::set<std::string> arc_ids;
  bool endpoints_ok = true;
  for (const Arc& arc : net.arcs()) {
    if (!arc_ids.insert(arc.id).second) {
      add("duplicate-arc", "arc id '" + arc.id + "' is used twice");
    }
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      add("dangling-arc", "arc '" + arc.id + "' references an unknown node");
      endpoints_ok = false;
      continue;
    }
    if (arc.tail == arc.head) {
      add("self-loop", "arc '" + arc.id + "' is a loop");
    }
    if (arc.capacity <= 0) {
      add("capacity", "arc '" + arc.id + "' has nonpositive capacity " +
                          ToString(arc.capacity));
    }
    if (arc.travel_time < 0) {
      add("travel-time", "arc '" + arc.id + "' has negative travel time");
    }
    if (arc.delay < 0) {
      add("delay", "arc '" + arc.id + "' has negative delay");
    }
  }
  if (!report.ok() && !endpoints_ok) return report;
  if (net.source() < 0 || net.source() >= n || net.sink() < 0 ||
      net.sink() >= n) {
    return report;
  }
  if (net.source() == net.sink()) {
    add("source-is-sink", "source and sink coincide");
    return report;
  }
  if (!net.in_arcs(net.source()).empty()) {
    add("source-indegree", "source '" + net.node_name(net.source()) +
                               "' has incoming arcs");
  }
  if (!net.out_arcs(net.sink()).empty()) {
    add("sink-outdegree",
        "sink '" + net.node_name(net.sink()) + "' has outgoing arcs");
  }
  const std::vector<bool> from_source = Reach(net, net.source(), true);
  const std::vector<bool> to_sink = Reach(net, net.sink(), false);
  if (!from_source[net.sink()]) {
    add("disconnected", "sink is not reachable from the source");
  }
  for (int v = 0; v < n; ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (!from_source[v] || !to_sink[v]) {
      add("off-path-node",
          "node '" + net.node_name(v) + "' lies on no source-sink walk");
    }
  }
  return report;
}

void RequireValid(const Network& network) {
  const ValidationReport report = ValidateNetwork(network);
  if (!report.ok()) ThrowInvalid("invalid network: " + report.Summary());
}

}  // namespace robustflow
