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

// Property suites over seeded corpora. Every suite checks its invariants by
// independent exact solves; a failing case is shrunk to a smaller instance
// that still fails the same check.
//
//   static-invariants    model orderings, one-failure properties, unit
//                        capacity formula, capacity splitting
//   dynamic-invariants   model orderings, empty budget, earliest arrival
//   embedding            static optima equal the embedded dynamic optima
//   oracle-equivalence   compact versus enumerated programs, max flow
//                        oracles, exact versus certified LP solves
//   partition-roundtrip  positive path-model optimum versus PARTITION
//   conjecture-probe     largest observed general/path ratio; never fails

#ifndef ROBUSTFLOW_SUITES_H_
#define ROBUSTFLOW_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "robustflow/dynamic_models.h"
#include "robustflow/json_io.h"
#include "robustflow/paths.h"

namespace robustflow {

struct SuiteOptions {
  int seeds = 20;
  // Node counts cycled through by the random corpora. Empty means the
  // suite's default. For partition-roundtrip: the largest multiset size.
  std::vector<int> sizes;
  std::vector<int> gammas;  // empty means the suite's default
  int jobs = 1;
  uint64_t base_seed = 1;
  Guards guards;
};

struct SuiteCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteCase {
  std::string label;
  Json params;
  std::vector<SuiteCheck> checks;
  Json metrics;         // null when the suite reports none
  Json counterexample;  // shrunk failing instance, null when all checks pass

  bool passed() const;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  Json summary;
  // False when any check failed. conjecture-probe never fails.
  bool passed() const;
};

std::vector<std::string> SuiteNames();

// Throws Error(kInvalidArgument) for an unknown suite name.
SuiteReport RunSuite(const std::string& name, const SuiteOptions& options);

Json SuiteReportToJson(const SuiteReport& report);

// Seeded corpora. Random DAG i has sizes[i % sizes.size()] nodes and
// 2 * (nodes - 2) + 2 arcs.
std::vector<DynamicInstance> RandomDagCorpus(int count, const std::vector<int>& sizes,
                                             int64_t max_capacity, uint64_t base_seed,
                                             int gamma);
// Acyclic dynamic instances with travel times up to 2, delays up to 3,
// horizons 3..6 and gamma alternating 1, 2.
std::vector<DynamicInstance> RandomDynamicCorpus(int count, const std::vector<int>& sizes,
                                                 uint64_t base_seed);

// Minimum s-t cut capacity by enumerating node bipartitions. Requires at
// most 22 nodes.
Rational BruteForceMinCut(const Network& network);

// Removes arc `a`, then every node that no longer lies on a source-sink walk.
// Returns nullopt when the sink becomes unreachable.
std::optional<Network> RemoveArc(const Network& network, int a);

}  // namespace robustflow

#endif  // ROBUSTFLOW_SUITES_H_
