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

// Directed multigraph with a distinguished source and sink. Parallel arcs are
// first-class: arcs are addressed by index, and carry a user-facing string id.
// Arc order is the order of insertion; every ordered output of the library
// (paths, scenarios, flow dumps) follows it.

#ifndef ROBUSTFLOW_NETWORK_H_
#define ROBUSTFLOW_NETWORK_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robustflow/rational.h"

namespace robustflow {

struct Arc {
  std::string id;
  int tail = -1;
  int head = -1;
  Rational capacity;
  int64_t travel_time = 0;
  int64_t delay = 0;
};

class Network {
 public:
  Network() = default;
  Network(std::vector<std::string> nodes, std::vector<Arc> arcs, int source,
          int sink);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::string& node_name(int v) const { return nodes_[v]; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  // Sorted by arc index.
  const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }

  std::optional<int> FindNode(const std::string& name) const;
  std::optional<int> FindArc(const std::string& id) const;

  Rational MaxCapacity() const;
  bool IsDag() const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Arc> arcs_;
  int source_ = -1;
  int sink_ = -1;
  std::vector<std::vector<int>> in_arcs_;
  std::vector<std::vector<int>> out_arcs_;
  std::map<std::string, int> node_index_;
  std::map<std::string, int> arc_index_;
};

class NetworkBuilder {
 public:
  // Returns the index of the node, creating it on first use.
  int AddNode(const std::string& name);
  // Nodes are created on demand. Returns the arc index.
  int AddArc(const std::string& id, const std::string& tail,
             const std::string& head, const Rational& capacity,
             int64_t travel_time = 0, int64_t delay = 0);
  void SetSource(const std::string& name) { source_ = AddNode(name); }
  void SetSink(const std::string& name) { sink_ = AddNode(name); }

  Network Build() const;

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, int> index_;
  std::vector<Arc> arcs_;
  int source_ = -1;
  int sink_ = -1;
};

struct Violation {
  std::string kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

// Checks the structural invariants every model relies on: the source has no
// incoming arcs, the sink no outgoing arcs, every other node lies on some
// source-node-sink walk, capacities are positive, times are nonnegative and
// ids are unique.
ValidationReport ValidateNetwork(const Network& network);

// Throws Error(kInvalidArgument) with the report summary when invalid.
void RequireValid(const Network& network);

}  // namespace robustflow

#endif  // ROBUSTFLOW_NETWORK_H_
