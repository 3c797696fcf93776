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

// Flow files and report serialization. A flow file names paths by arc ids,
// so it stays valid across catalog orderings:
//
//   {"kind": "subpath", "dynamic": true,
//    "entries": [{"path": ["a1", "a3"], "theta": 2, "value": "1/2"},
//                {"arc": "a4", "theta": 1, "value": 1}]}
//
// Arc flows use "arc"; every other kind uses "path". "theta" is required for
// dynamic path, arc and subpath flows and absent for static and temporally
// repeated ones.

#ifndef ROBUSTFLOW_FLOW_IO_H_
#define ROBUSTFLOW_FLOW_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "robustflow/dynamic_models.h"
#include "robustflow/json_io.h"
#include "robustflow/static_models.h"

namespace robustflow {

Json StaticFlowToJson(const Network& network, const PathCatalog& catalog,
                      const StaticFlow& flow);
Json DynamicFlowToJson(const Network& network, const PathCatalog& catalog,
                       const DynamicFlow& flow);

struct FlowFile {
  bool dynamic = false;
  StaticFlow static_flow;
  DynamicFlow dynamic_flow;
};

// Throws Error(kInvalidArgument) for unknown arcs, paths outside the catalog
// and malformed entries. A file is dynamic when it says so, when its kind is
// temporally repeated, or when any entry carries "theta". Repeated entries
// add up.
FlowFile FlowFromJson(const Network& network, const PathCatalog& catalog,
                      const Json& json);

Json ScenarioToJson(const Network& network, const Scenario& scenario);
// "{a1,a3}"; "{}" for the empty scenario.
std::string ScenarioLabel(const Network& network, const Scenario& scenario);

Json StaticReportToJson(const Network& network, const RobustReport& report);
Json DynamicReportToJson(const Network& network,
                         const DynamicRobustReport& report);

}  // namespace robustflow

#endif  // ROBUSTFLOW_FLOW_IO_H_
