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

// Robust flows over time with arc delays. Time is discrete, steps 1..T, and
// flow values are zero outside that window. A scenario delays at most `gamma`
// arcs; a delayed arc takes travel_time + delay steps. Flow counts only when
// it reaches the sink by T.
//
// x(P, theta) is the rate entering path P at its first node at step theta.
// For an arc a of P, the flow entering a at step theta under scenario z
// entered P at EntryTimeAtArc(P, a, theta, z): theta minus the (possibly
// delayed) travel times of the arcs before a.

#ifndef ROBUSTFLOW_DYNAMIC_MODELS_H_
#define ROBUSTFLOW_DYNAMIC_MODELS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robustflow/lp.h"
#include "robustflow/network.h"
#include "robustflow/paths.h"
#include "robustflow/static_models.h"

namespace robustflow {

struct DynamicInstance {
  Network network;
  int64_t horizon = 1;
  int gamma = 0;
};

void RequireValid(const DynamicInstance& instance);

// Values keyed by (index, theta) with theta in 1..T. Temporally repeated
// flows hold one constant rate per s-t path under theta = 0.
struct DynamicFlow {
  FlowKind kind = FlowKind::kSubpath;
  std::map<std::pair<int, int64_t>, Rational> values;
};

// Sum of the delays of the arcs of `path` that lie in `z`.
int64_t PathDelay(const Network& network, const Path& path, const Scenario& z);
// Entry time into `path` of flow entering its arc at `position` at `theta`.
int64_t EntryTimeAtArc(const Network& network, const Path& path,
                       size_t position, int64_t theta, const Scenario& z);
// Entry time into `path` of flow reaching its last node at `theta`.
int64_t EntryTime(const Network& network, const Path& path, int64_t theta,
                  const Scenario& z);
// Entry time into arc `a` of flow reaching its head at `theta`.
int64_t ArcEntryTime(const Network& network, int arc, int64_t theta,
                     const Scenario& z);

enum class DynamicModel {
  kPath,                // dpm
  kArc,                 // dam
  kArcCompact,          // dam-compact, the dualized arc model
  kGeneral,             // dgm
  kTemporallyRepeated,  // tr
};

std::string DynamicModelName(DynamicModel model);

struct DynamicModelLp {
  lp::LinearProgram program;
  FlowKind kind = FlowKind::kSubpath;
  std::map<std::pair<int, int64_t>, int> flow_var;
  int epigraph_var = -1;
  // Flow reaching the sink by T when nothing is delayed.
  std::vector<lp::Term> nominal_objective;
};

DynamicModelLp BuildDynamicPathModel(const DynamicInstance& instance,
                                     const PathCatalog& catalog,
                                     const ModelOptions& options = {});
DynamicModelLp BuildDynamicArcModel(const DynamicInstance& instance,
                                    const ModelOptions& options = {});
DynamicModelLp BuildDynamicArcCompactModel(const DynamicInstance& instance);
DynamicModelLp BuildDynamicGeneralModel(const DynamicInstance& instance,
                                        const PathCatalog& catalog,
                                        const ModelOptions& options = {});
DynamicModelLp BuildTemporallyRepeatedModel(const DynamicInstance& instance,
                                            const PathCatalog& catalog,
                                            const ModelOptions& options = {});
// Nominal arc-time program with strict conservation, as an oracle for
// NominalDynamicMaxFlow.
DynamicModelLp BuildNominalDynamicModel(const DynamicInstance& instance);

struct DynamicRobustReport {
  Rational nominal_value;
  Rational robust_value;
  std::vector<std::pair<Scenario, Rational>> per_scenario_arrival;
  std::vector<Scenario> minimizing_scenarios;
  std::optional<int64_t> earliest_arrival;  // nullopt stands for infinity
  std::vector<std::string> violations;

  bool feasible() const { return violations.empty(); }
};

// Enumerates every scenario over all arcs, independent of any LP. Capacity is
// checked for all kinds, robust conservation for arc and subpath flows.
DynamicRobustReport EvaluateDynamic(const DynamicInstance& instance,
                                    const PathCatalog& catalog,
                                    const DynamicFlow& flow,
                                    const Guards& guards = {});

DynamicFlow ExpandTemporallyRepeated(const DynamicFlow& flow, int64_t horizon);

// Maximum flow reaching the sink by T, via a time-expanded network.
Rational NominalDynamicMaxFlow(const DynamicInstance& instance);

// travel_time = 0, delay = 1, horizon 1: a delay then equals a failure.
DynamicInstance EmbedStatic(const Network& network, int gamma);

struct DynamicSolveOptions {
  bool maximize_nominal = false;
  ModelOptions model;
  lp::SolveOptions lp;
};

struct DynamicResult {
  DynamicModel model = DynamicModel::kGeneral;
  Rational objective;
  DynamicFlow flow;
  DynamicRobustReport report;
  lp::SolveStats stats;
};

DynamicResult SolveDynamic(const DynamicInstance& instance,
                           const PathCatalog& catalog, DynamicModel model,
                           const DynamicSolveOptions& options = {});

}  // namespace robustflow

#endif  // ROBUSTFLOW_DYNAMIC_MODELS_H_
