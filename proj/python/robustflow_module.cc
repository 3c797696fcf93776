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

// Python bindings. Instances, flows and results cross the boundary as JSON
// text; the robustflow package converts them to dicts and Fractions.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robustflow/dynamic_models.h"
#include "robustflow/errors.h"
#include "robustflow/flow_io.h"
#include "robustflow/instances.h"
#include "robustflow/json_io.h"
#include "robustflow/max_flow.h"
#include "robustflow/paths.h"
#include "robustflow/static_models.h"
#include "robustflow/suites.h"

namespace py = pybind11;

namespace robustflow {
namespace {

struct Loaded {
  InstanceFile file;
  int gamma = 0;
  std::optional<int64_t> horizon;
};

Loaded Load(const std::string& instance_json, std::optional<int> gamma,
            std::optional<int64_t> horizon) {
  Loaded l;
  l.file = InstanceFromJson(Json::parse(instance_json));
  if (gamma) {
    l.gamma = *gamma;
  } else if (l.file.gamma) {
    l.gamma = *l.file.gamma;
  } else {
    ThrowInvalid("gamma is neither given nor stored in the instance");
  }
  l.horizon = horizon ? horizon : l.file.horizon;
  return l;
}

DynamicInstance ToDynamic(const Loaded& l) {
  if (!l.horizon) ThrowInvalid("dynamic models need a horizon");
  return {l.file.network, *l.horizon, l.gamma};
}

std::optional<StaticModel> FindStaticModel(const std::string& name) {
  for (StaticModel m : {StaticModel::kPath, StaticModel::kArc, StaticModel::kGeneral,
                        StaticModel::kCompactGammaOne}) {
    if (StaticModelName(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<DynamicModel> FindDynamicModel(const std::string& name) {
  for (DynamicModel m : {DynamicModel::kPath, DynamicModel::kArc, DynamicModel::kArcCompact,
                         DynamicModel::kGeneral, DynamicModel::kTemporallyRepeated}) {
    if (DynamicModelName(m) == name) return m;
  }
  return std::nullopt;
}

std::string Generate(const std::string& family, const std::string& params_json) {
  return InstanceToJson(GenerateFamily(family, Json::parse(params_json))).dump();
}

std::string Solve(const std::string& instance_json, const std::string& model,
                  std::optional<int> gamma, std::optional<int64_t> horizon, bool lex_nominal,
                  bool full_scenarios) {
  const Loaded l = Load(instance_json, gamma, horizon);
  const Guards guards = Guards::FromEnvironment();
  const Network& net = l.file.network;
  const PathCatalog catalog(net, guards);
  Json out;
  out["model"] = model;
  out["gamma"] = l.gamma;
  if (const std::optional<StaticModel> m = FindStaticModel(model)) {
    StaticSolveOptions o;
    o.maximize_nominal = lex_nominal;
    o.model.full_scenarios = full_scenarios;
    o.model.guards = guards;
    const StaticResult r = SolveStatic(net, catalog, *m, l.gamma, o);
    out["objective"] = RationalToJson(r.objective);
    out["report"] = StaticReportToJson(net, r.report);
    out["flow"] = StaticFlowToJson(net, catalog, r.flow);
  } else if (const std::optional<DynamicModel> d = FindDynamicModel(model)) {
    DynamicSolveOptions o;
    o.maximize_nominal = lex_nominal;
    o.model.full_scenarios = full_scenarios;
    o.model.guards = guards;
    const DynamicInstance inst = ToDynamic(l);
    const DynamicResult r = SolveDynamic(inst, catalog, *d, o);
    out["horizon"] = inst.horizon;
    out["objective"] = RationalToJson(r.objective);
    out["report"] = DynamicReportToJson(net, r.report);
    out["flow"] = DynamicFlowToJson(net, catalog, r.flow);
  } else {
    ThrowInvalid("unknown model '" + model + "'");
  }
  return out.dump();
}

std::string Evaluate(const std::string& instance_json, const std::string& flow_json,
                     std::optional<int> gamma, std::optional<int64_t> horizon) {
  const Loaded l = Load(instance_json, gamma, horizon);
  const Guards guards = Guards::FromEnvironment();
  const Network& net = l.file.network;
  const PathCatalog catalog(net, guards);
  const FlowFile flow = FlowFromJson(net, catalog, Json::parse(flow_json));
  if (flow.dynamic) {
    return DynamicReportToJson(net,
                               EvaluateDynamic(ToDynamic(l), catalog, flow.dynamic_flow, guards))
        .dump();
  }
  return StaticReportToJson(net, EvaluateStatic(net, catalog, flow.static_flow, l.gamma, guards))
      .dump();
}

std::string NominalValue(const std::string& instance_json, std::optional<int64_t> horizon) {
  const InstanceFile file = InstanceFromJson(Json::parse(instance_json));
  const std::optional<int64_t> t = horizon ? horizon : file.horizon;
  if (!t) return RationalToJson(NominalMaxFlow(file.network).value).dump();
  return RationalToJson(NominalDynamicMaxFlow({file.network, *t, 0})).dump();
}

std::string RunSuiteJson(const std::string& name, int seeds, std::vector<int> sizes,
                         std::vector<int> gammas, uint64_t base_seed, int jobs) {
  SuiteOptions o;
  o.seeds = seeds;
  o.sizes = std::move(sizes);
  o.gammas = std::move(gammas);
  o.base_seed = base_seed;
  o.jobs = jobs;
  o.guards = Guards::FromEnvironment();
  return SuiteReportToJson(RunSuite(name, o)).dump();
}

}  // namespace
}  // namespace robustflow

PYBIND11_MODULE(_robustflow, m) {
  using namespace robustflow;
  m.doc() = "Exact robust maximum flows under arc failures and delays.";

  static PyObject* error = py::exception<Error>(m, "Error").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const char* code = "internal";
      switch (e.code()) {
        case ErrorCode::kInvalidArgument:
          code = "invalid_argument";
          break;
        case ErrorCode::kGuardExceeded:
          code = "guard_exceeded";
          break;
        case ErrorCode::kInfeasible:
          code = "infeasible";
          break;
        case ErrorCode::kInternal:
          break;
      }
      PyErr_SetObject(error, py::make_tuple(code, e.what()).ptr());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("generate", &Generate, py::arg("family"), py::arg("params_json"));
  m.def("solve", &Solve, py::arg("instance_json"), py::arg("model"), py::arg("gamma"),
        py::arg("horizon"), py::arg("lex_nominal"), py::arg("full_scenarios"));
  m.def("evaluate", &Evaluate, py::arg("instance_json"), py::arg("flow_json"),
        py::arg("gamma"), py::arg("horizon"));
  m.def("nominal_value", &NominalValue, py::arg("instance_json"), py::arg("horizon"));
  m.def("run_suite", &RunSuiteJson, py::arg("name"), py::arg("seeds"), py::arg("sizes"),
        py::arg("gammas"), py::arg("base_seed"), py::arg("jobs"));
  m.def("suite_names", &SuiteNames);
}
