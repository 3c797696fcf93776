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

#include "robustflow/flow_io.h"

#include "robustflow/errors.h"

namespace robustflow {

namespace {

Json PathEntry(const Network& network, const PathCatalog& catalog, FlowKind kind,
               int index) {
  Json entry;
  const Path p = FlowPath(network, catalog, kind, index);
  if (kind == FlowKind::kArc) {
    entry["arc"] = network.arc(p.arcs.front()).id;
  } else {
    Json ids = Json::array();
    for (int a : p.arcs) ids.push_back(network.arc(a).id);
    entry["path"] = std::move(ids);
  }
  return entry;
}

int ResolveIndex(const Network& network, const PathCatalog& catalog, FlowKind kind,
                 const Json& entry) {
  if (kind == FlowKind::kArc) {
    if (!entry.contains("arc") || !entry.at("arc").is_string()) {
      ThrowInvalid("arc flow entries need an \"arc\" id: " + entry.dump());
    }
    const std::string id = entry.at("arc").get<std::string>();
    const std::optional<int> a = network.FindArc(id);
    if (!a) ThrowInvalid("unknown arc '" + id + "'");
    return *a;
  }
  if (!entry.contains("path") || !entry.at("path").is_array()) {
    ThrowInvalid("path flow entries need a \"path\" array of arc ids: " + entry.dump());
  }
  std::vector<int> arcs;
  for (const Json& id : entry.at("path")) {
    if (!id.is_string()) ThrowInvalid("path entries must list arc ids as strings");
    const std::optional<int> a = network.FindArc(id.get<std::string>());
    if (!a) ThrowInvalid("unknown arc '" + id.get<std::string>() + "'");
    arcs.push_back(*a);
  }
  const bool st = kind == FlowKind::kPath || kind == FlowKind::kTemporallyRepeated;
  const int index = st ? catalog.FindStPath(arcs) : catalog.FindSubpath(arcs);
  if (index < 0) {
    ThrowInvalid("path " + entry.at("path").dump() + " is not " +
                 (st ? "a source-sink path" : "a subpath of a source-sink path"));
  }
  return index;
}

}  // namespace

Json StaticFlowToJson(const Network& network, const PathCatalog& catalog,
                      const StaticFlow& flow) {
  Json out;
  out["kind"] = FlowKindName(flow.kind);
  out["dynamic"] = false;
  Json entries = Json::array();
  for (const auto& [index, value] : flow.values) {
    Json e = PathEntry(network, catalog, flow.kind, index);
    e["value"] = RationalToJson(value);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json DynamicFlowToJson(const Network& network, const PathCatalog& catalog,
                       const DynamicFlow& flow) {
  Json out;
  out["kind"] = FlowKindName(flow.kind);
  out["dynamic"] = true;
  Json entries = Json::array();
  for (const auto& [key, value] : flow.values) {
    Json e = PathEntry(network, catalog, flow.kind, key.first);
    if (flow.kind != FlowKind::kTemporallyRepeated) e["theta"] = key.second;
    e["value"] = RationalToJson(value);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

FlowFile FlowFromJson(const Network& network, const PathCatalog& catalog,
                      const Json& json) {
  if (!json.is_object()) ThrowInvalid("flow file must be a JSON object");
  if (!json.contains("kind") || !json.at("kind").is_string()) {
    ThrowInvalid("flow file needs a \"kind\" string");
  }
  const FlowKind kind = ParseFlowKind(json.at("kind").get<std::string>());
  if (!json.contains("entries") || !json.at("entries").is_array()) {
    ThrowInvalid("flow file needs an \"entries\" array");
  }
  const Json& entries = json.at("entries");
  FlowFile out;
  out.dynamic = kind == FlowKind::kTemporallyRepeated;
  if (json.contains("dynamic")) {
    if (!json.at("dynamic").is_boolean()) ThrowInvalid("\"dynamic\" must be a boolean");
    out.dynamic = out.dynamic || json.at("dynamic").get<bool>();
  }
  for (const Json& e : entries) {
    if (e.is_object() && e.contains("theta")) out.dynamic = true;
  }
  out.static_flow.kind = kind;
  out.dynamic_flow.kind = kind;
  for (const Json& e : entries) {
    if (!e.is_object() || !e.contains("value")) {
      ThrowInvalid("flow entries need a \"value\": " + e.dump());
    }
    const int index = ResolveIndex(network, catalog, kind, e);
    const Rational value = RationalFromJson(e.at("value"));
    if (!out.dynamic) {
      out.static_flow.values[index] += value;
      continue;
    }
    int64_t theta = 0;
    if (kind != FlowKind::kTemporallyRepeated) {
      if (!e.contains("theta") || !e.at("theta").is_number_integer()) {
        ThrowInvalid("dynamic flow entries need an integer \"theta\": " + e.dump());
      }
      theta = e.at("theta").get<int64_t>();
    }
    out.dynamic_flow.values[{index, theta}] += value;
  }
  return out;
}

Json ScenarioToJson(const Network& network, const Scenario& scenario) {
  Json out = Json::array();
  for (int a : scenario.arcs) out.push_back(network.arc(a).id);
  return out;
}

std::string ScenarioLabel(const Network& network, const Scenario& scenario) {
  std::string out = "{";
  for (size_t i = 0; i < scenario.arcs.size(); ++i) {
    if (i > 0) out += ",";
    out += network.arc(scenario.arcs[i]).id;
  }
  return out + "}";
}

Json StaticReportToJson(const Network& network, const RobustReport& report) {
  Json out;
  out["feasible"] = report.feasible();
  out["nominal_value"] = RationalToJson(report.nominal_value);
  out["robust_value"] = RationalToJson(report.robust_value);
  out["worst_loss"] = RationalToJson(report.worst_loss);
  Json worst = Json::array();
  for (const Scenario& s : report.worst_scenarios) worst.push_back(ScenarioToJson(network, s));
  out["worst_scenarios"] = std::move(worst);
  Json exposure = Json::object();
  for (int a = 0; a < network.num_arcs() && a < static_cast<int>(report.arc_exposure.size());
       ++a) {
    if (sgn(report.arc_exposure[a]) != 0) {
      exposure[network.arc(a).id] = RationalToJson(report.arc_exposure[a]);
    }
  }
  out["arc_exposure"] = std::move(exposure);
  out["violations"] = report.violations;
  return out;
}

Json DynamicReportToJson(const Network& network, const DynamicRobustReport& report) {
  Json out;
  out["feasible"] = report.feasible();
  out["nominal_value"] = RationalToJson(report.nominal_value);
  out["robust_value"] = RationalToJson(report.robust_value);
  Json minimizing = Json::array();
  for (const Scenario& s : report.minimizing_scenarios) {
    minimizing.push_back(ScenarioToJson(network, s));
  }
  out["minimizing_scenarios"] = std::move(minimizing);
  if (report.earliest_arrival) {
    out["earliest_arrival"] = *report.earliest_arrival;
  } else {
    out["earliest_arrival"] = "inf";
  }
  Json per = Json::array();
  for (const auto& [z, value] : report.per_scenario_arrival) {
    per.push_back({{"scenario", ScenarioToJson(network, z)},
                   {"arrival", RationalToJson(value)}});
  }
  out["per_scenario_arrival"] = std::move(per);
  out["violations"] = report.violations;
  return out;
}

}  // namespace robustflow
