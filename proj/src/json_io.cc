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

#include "robustflow/json_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "robustflow/errors.h"

namespace robustflow {

Json RationalToJson(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (IsIntegral(value) && value.get_num().fits_slong_p()) {
    return Json(value.get_num().get_si());
  }
  return Json(ToString(value));
}

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<int64_t>()));
  }
  if (value.is_string()) return ParseRational(value.get<std::string>());
  ThrowInvalid("expected an integer or a \"p/q\" string, got " + value.dump());
}

Json InstanceToJson(const InstanceFile& instance) {
  const Network& net = instance.network;
  Json out;
  out["nodes"] = net.nodes();
  Json arcs = Json::array();
  for (const Arc& arc : net.arcs()) {
    Json a;
    a["id"] = arc.id;
    a["tail"] = net.node_name(arc.tail);
    a["head"] = net.node_name(arc.head);
    a["capacity"] = RationalToJson(arc.capacity);
    a["travel_time"] = arc.travel_time;
    a["delay"] = arc.delay;
    arcs.push_back(std::move(a));
  }
  out["arcs"] = std::move(arcs);
  out["source"] = net.node_name(net.source());
  out["sink"] = net.node_name(net.sink());
  if (instance.horizon) out["horizon"] = *instance.horizon;
  if (instance.gamma) out["gamma"] = *instance.gamma;
  if (!instance.provenance.is_null()) out["provenance"] = instance.provenance;
  return out;
}

namespace {

const Json& Field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    ThrowInvalid(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

std::string StringField(const Json& object, const char* name) {
  const Json& v = Field(object, name);
  if (!v.is_string()) ThrowInvalid(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

int64_t IntegerField(const Json& object, const char* name, int64_t fallback) {
  if (!object.contains(name)) return fallback;
  const Json& v = object.at(name);
  if (!v.is_number_integer()) {
    ThrowInvalid(std::string("field '") + name + "' must be an integer");
  }
  return v.get<int64_t>();
}

}  // namespace

InstanceFile InstanceFromJson(const Json& json) {
  if (!json.is_object()) ThrowInvalid("instance must be a JSON object");
  const Json& nodes = Field(json, "nodes");
  if (!nodes.is_array()) ThrowInvalid("'nodes' must be an array");
  NetworkBuilder builder;
  std::vector<std::string> names;
  for (const Json& n : nodes) {
    if (!n.is_string()) ThrowInvalid("node ids must be strings");
    builder.AddNode(n.get<std::string>());
    names.push_back(n.get<std::string>());
  }
  auto known = [&names](const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  const Json& arcs = Field(json, "arcs");
  if (!arcs.is_array()) ThrowInvalid("'arcs' must be an array");
  for (const Json& a : arcs) {
    const std::string id = StringField(a, "id");
    const std::string tail = StringField(a, "tail");
    const std::string head = StringField(a, "head");
    if (!known(tail) || !known(head)) {
      ThrowInvalid("arc '" + id + "' references an unknown node");
    }
    builder.AddArc(id, tail, head, RationalFromJson(Field(a, "capacity")),
                   IntegerField(a, "travel_time", 0), IntegerField(a, "delay", 0));
  }
  const std::string source = StringField(json, "source");
  const std::string sink = StringField(json, "sink");
  if (!known(source) || !known(sink)) ThrowInvalid("unknown source or sink node");
  builder.SetSource(source);
  builder.SetSink(sink);
  InstanceFile out;
  out.network = builder.Build();
  RequireValid(out.network);
  if (json.contains("horizon")) {
    out.horizon = IntegerField(json, "horizon", 0);
    if (*out.horizon < 1) ThrowInvalid("horizon must be positive");
  }
  if (json.contains("gamma")) {
    const int64_t g = IntegerField(json, "gamma", 0);
    if (g < 0) ThrowInvalid("gamma must be nonnegative");
    out.gamma = static_cast<int>(g);
  }
  if (json.contains("provenance")) out.provenance = json.at("provenance");
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowInvalid("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    ThrowInvalid("cannot parse '" + path + "': " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ThrowInvalid("cannot write '" + path + "'");
  out << text;
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace robustflow
