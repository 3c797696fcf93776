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

#include "robustflow/paths.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "robustflow/errors.h"

namespace robustflow {

namespace {

size_t EnvOr(const char* name, size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    ThrowInvalid(std::string(name) + " is not a nonnegative integer");
  }
  return static_cast<size_t>(value);
}

[[noreturn]] void ThrowGuard(const std::string& what, size_t cap) {
  throw Error(ErrorCode::kGuardExceeded,
              what + " exceeds the guard of " + std::to_string(cap));
}

}  // namespace

Guards Guards::FromEnvironment() {
  Guards g;
  g.max_paths = EnvOr("ROBUSTFLOW_GUARD_PATHS", g.max_paths);
  g.max_scenarios = EnvOr("ROBUSTFLOW_GUARD_SCENARIOS", g.max_scenarios);
  return g;
}

bool Path::Contains(int arc) const {
  return std::find(arcs.begin(), arcs.end(), arc) != arcs.end();
}

std::string Path::ToString(const Network& network) const {
  std::string out;
  for (int a : arcs) {
    if (!out.empty()) out += ",";
    out += network.arc(a).id;
  }
  return out;
}

int64_t TravelTime(const Network& network, const Path& path) {
  int64_t total = 0;
  for (int a : path.arcs) total += network.arc(a).travel_time;
  return total;
}

std::vector<Path> EnumerateStPaths(const Network& network,
                                   const Guards& guards) {
  RequireValid(network);
  std::vector<Path> paths;
  std::vector<bool> on_path(network.num_nodes(), false);
  std::vector<int> arcs;
  // Iterative DFS; out-arcs are visited in index order, which yields the
  // lexicographic order of arc sequences.
  struct Frame {
    int node;
    size_t next;
  };
  std::vector<Frame> stack = {{network.source(), 0}};
  on_path[network.source()] = true;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& out = network.out_arcs(top.node);
    if (top.next == out.size()) {
      on_path[top.node] = false;
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
      continue;
    }
    const int a = out[top.next++];
    const int w = network.arc(a).head;
    if (on_path[w]) continue;
    if (w == network.sink()) {
      if (paths.size() >= guards.max_paths) {
        ThrowGuard("number of source-sink paths", guards.max_paths);
      }
      Path p;
      p.arcs = arcs;
      p.arcs.push_back(a);
      p.start = network.source();
      p.end = w;
      paths.push_back(std::move(p));
      continue;
    }
    arcs.push_back(a);
    on_path[w] = true;
    stack.push_back({w, 0});
  }
  return paths;
}

PathCatalog::PathCatalog(const Network& network, const Guards& guards)
    : st_paths_(EnumerateStPaths(network, guards)),
      by_end_(network.num_nodes()),
      by_start_(network.num_nodes()),
      by_arc_(network.num_arcs()),
      st_by_arc_(network.num_arcs()) {
  std::set<std::vector<int>> segments;
  for (const Path& p : st_paths_) {
    const size_t len = p.arcs.size();
    for (size_t i = 0; i < len; ++i) {
      for (size_t j = i + 1; j <= len; ++j) {
        segments.emplace(p.arcs.begin() + i, p.arcs.begin() + j);
        if (segments.size() > guards.max_paths) {
          ThrowGuard("number of subpaths", guards.max_paths);
        }
      }
    }
  }
  subpaths_.reserve(segments.size());
  for (const std::vector<int>& seq : segments) {
    Path p;
    p.arcs = seq;
    p.start = network.arc(seq.front()).tail;
    p.end = network.arc(seq.back()).head;
    const int index = static_cast<int>(subpaths_.size());
    subpath_index_.emplace(seq, index);
    by_end_[p.end].push_back(index);
    by_start_[p.start].push_back(index);
    for (int a : seq) by_arc_[a].push_back(index);
    subpaths_.push_back(std::move(p));
  }
  for (int i = 0; i < static_cast<int>(st_paths_.size()); ++i) {
    st_index_.emplace(st_paths_[i].arcs, i);
    for (int a : st_paths_[i].arcs) st_by_arc_[a].push_back(i);
  }
}

int PathCatalog::FindSubpath(const std::vector<int>& arcs) const {
  auto it = subpath_index_.find(arcs);
  return it == subpath_index_.end() ? -1 : it->second;
}

int PathCatalog::FindStPath(const std::vector<int>& arcs) const {
  auto it = st_index_.find(arcs);
  return it == st_index_.end() ? -1 : it->second;
}

std::vector<int> PathCatalog::ArcsOfSubpaths(
    const std::vector<int>& indices) const {
  std::set<int> arcs;
  for (int i : indices) arcs.insert(subpaths_[i].arcs.begin(),
                                    subpaths_[i].arcs.end());
  return {arcs.begin(), arcs.end()};
}

bool Scenario::Contains(int arc) const {
  return std::binary_search(arcs.begin(), arcs.end(), arc);
}

uint64_t CountScenarios(size_t universe_size, int gamma) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, k)
  const size_t n = universe_size;
  for (size_t k = 0; k <= static_cast<size_t>(std::max(gamma, 0)) && k <= n;
       ++k) {
    if (k > 0) {
      // binom = binom * (n - k + 1) / k, guarding overflow.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (n - k + 1) / k;
      if (next > kMax) return kMax;
      binom = static_cast<uint64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

std::vector<Scenario> EnumerateScenarios(const std::vector<int>& universe,
                                         int gamma, const Guards& guards) {
  if (gamma < 0) ThrowInvalid("gamma must be nonnegative");
  std::vector<int> items = universe;
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  const uint64_t count = CountScenarios(items.size(), gamma);
  if (count > guards.max_scenarios) {
    ThrowGuard("number of scenarios", guards.max_scenarios);
  }
  std::vector<Scenario> out;
  out.reserve(count);
  out.push_back(Scenario{});
  const int n = static_cast<int>(items.size());
  for (int k = 1; k <= std::min(gamma, n); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Scenario s;
      s.arcs.reserve(k);
      for (int i : pick) s.arcs.push_back(items[i]);
      out.push_back(std::move(s));
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::vector<int> AllArcs(const Network& network) {
  std::vector<int> arcs(network.num_arcs());
  for (int a = 0; a < network.num_arcs(); ++a) arcs[a] = a;
  return arcs;
}

}  // namespace robustflow
