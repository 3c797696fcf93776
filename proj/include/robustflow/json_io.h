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

// Instance files:
//   {"nodes": ["s", ...],
//    "arcs": [{"id": "a1", "tail": "s", "head": "v", "capacity": "3/2",
//              "travel_time": 0, "delay": 1}, ...],
//    "source": "s", "sink": "t",
//    "horizon": 6, "gamma": 1, "provenance": {...}}
// "horizon", "gamma" and "provenance" are optional. Capacities are integers
// or "p/q" strings.

#ifndef ROBUSTFLOW_JSON_IO_H_
#define ROBUSTFLOW_JSON_IO_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "robustflow/network.h"

namespace robustflow {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  Network network;
  std::optional<int64_t> horizon;
  std::optional<int> gamma;
  Json provenance;  // null when absent
};

Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& value);

Json InstanceToJson(const InstanceFile& instance);
// Throws Error(kInvalidArgument) on malformed input, dangling node ids and
// structurally invalid networks.
InstanceFile InstanceFromJson(const Json& json);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);
// Two-space indent and a trailing newline.
std::string DumpJson(const Json& json);

}  // namespace robustflow

#endif  // ROBUSTFLOW_JSON_IO_H_
