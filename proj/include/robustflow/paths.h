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

#ifndef ROBUSTFLOW_PATHS_H_
#define ROBUSTFLOW_PATHS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "robustflow/network.h"

namespace robustflow {

// Caps on combinatorial enumeration. Exceeding one throws
// Error(kGuardExceeded).
struct Guards {
  size_t max_paths = 100000;
  size_t max_scenarios = 1000000;

  // Defaults overridden by ROBUSTFLOW_GUARD_PATHS and
  // ROBUSTFLOW_GUARD_SCENARIOS when set.
  static Guards FromEnvironment();
};

// A simple directed path, stored as its arc sequence.
struct Path {
  std::vector<int> arcs;
  int start = -1;
  int end = -1;

  bool Contains(int arc) const;
  std::string ToString(const Network& network) const;  // "a1,a3"
};

int64_t TravelTime(const Network& network, const Path& path);

// All simple source-sink paths in lexicographic order of arc index sequences.
std::vector<Path> EnumerateStPaths(const Network& network,
                                   const Guards& guards = {});

// The s-t paths together with every nonempty contiguous subpath of them.
class PathCatalog {
 public:
  explicit PathCatalog(const Network& network, const Guards& guards = {});

  const std::vector<Path>& st_paths() const { return st_paths_; }
  const std::vector<Path>& subpaths() const { return subpaths_; }

  // Subpath indices, ascending.
  const std::vector<int>& subpaths_ending_at(int v) const { return by_end_[v]; }
  const std::vector<int>& subpaths_starting_at(int v) const {
    return by_start_[v];
  }
  const std::vector<int>& subpaths_through(int arc) const {
    return by_arc_[arc];
  }
  const std::vector<int>& st_paths_through(int arc) const {
    return st_by_arc_[arc];
  }

  // Index in subpaths(), or -1.
  int FindSubpath(const std::vector<int>& arcs) const;
  int FindStPath(const std::vector<int>& arcs) const;

  // Sorted union of the arcs of the given subpaths.
  std::vector<int> ArcsOfSubpaths(const std::vector<int>& indices) const;

 private:
  std::vector<Path> st_paths_;
  std::vector<Path> subpaths_;
  std::vector<std::vector<int>> by_end_;
  std::vector<std::vector<int>> by_start_;
  std::vector<std::vector<int>> by_arc_;
  std::vector<std::vector<int>> st_by_arc_;
  std::map<std::vector<int>, int> subpath_index_;
  std::map<std::vector<int>, int> st_index_;
};

// A set of failing arcs, as sorted arc indices.
struct Scenario {
  std::vector<int> arcs;

  bool Contains(int arc) const;
  bool operator==(const Scenario& other) const = default;
  auto operator<=>(const Scenario& other) const = default;
};

// Number of subsets of an n-set of size at most gamma, saturated at
// UINT64_MAX.
uint64_t CountScenarios(size_t universe_size, int gamma);

// Every subset of `universe` with at most `gamma` elements, ordered by size
// then lexicographically. The empty scenario comes first.
std::vector<Scenario> EnumerateScenarios(const std::vector<int>& universe,
                                         int gamma, const Guards& guards = {});

// All arcs of the network as a universe.
std::vector<int> AllArcs(const Network& network);

}  // namespace robustflow

#endif  // ROBUSTFLOW_PATHS_H_
