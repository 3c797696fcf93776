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

#include "robustflow/cli.h"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "robustflow/dynamic_models.h"
#include "robustflow/errors.h"
#include "robustflow/flow_io.h"
#include "robustflow/instances.h"
#include "robustflow/json_io.h"
#include "robustflow/static_models.h"
#include "robustflow/suites.h"

namespace robustflow {

namespace {

const std::vector<std::string> kStaticModels = {"pm", "am", "gm", "gm1"};
const std::vector<std::string> kDynamicModels = {"dpm", "dam", "dam-compact", "dgm", "tr"};

bool IsStaticModel(const std::string& m) {
  return std::find(kStaticModels.begin(), kStaticModels.end(), m) != kStaticModels.end();
}

StaticModel ParseStaticModel(const std::string& m) {
  if (m == "pm") return StaticModel::kPath;
  if (m == "am") return StaticModel::kArc;
  if (m == "gm") return StaticModel::kGeneral;
  if (m == "gm1") return StaticModel::kCompactGammaOne;
  ThrowInvalid("unknown static model '" + m + "'");
}

DynamicModel ParseDynamicModel(const std::string& m) {
  if (m == "dpm") return DynamicModel::kPath;
  if (m == "dam") return DynamicModel::kArc;
  if (m == "dam-compact") return DynamicModel::kArcCompact;
  if (m == "dgm") return DynamicModel::kGeneral;
  if (m == "tr") return DynamicModel::kTemporallyRepeated;
  ThrowInvalid("unknown model '" + m +
               "' (expected pm, am, gm, gm1, dpm, dam, dam-compact, dgm or tr)");
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ScenarioList(const Network& net, const std::vector<Scenario>& scenarios) {
  std::string out;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    if (i > 0) out += ";";
    out += ScenarioLabel(net, scenarios[i]);
  }
  return out;
}

std::string Approx(const Rational& r) {
  std::ostringstream s;
  s.precision(12);
  s << ToDouble(r);
  return s.str();
}

// Shared by solve, compare and evaluate.
struct Context {
  InstanceFile instance;
  int gamma = 0;
  std::optional<int64_t> horizon;
  Guards guards;
};

Context LoadContext(const std::string& path, std::optional<int> gamma,
                    std::optional<int64_t> horizon) {
  Context c;
  c.instance = InstanceFromJson(ReadJsonFile(path));
  c.guards = Guards::FromEnvironment();
  if (gamma) {
    c.gamma = *gamma;
  } else if (c.instance.gamma) {
    c.gamma = *c.instance.gamma;
  } else {
    ThrowInvalid("gamma is neither given with --gamma nor stored in the instance");
  }
  if (c.gamma < 0) ThrowInvalid("gamma must be nonnegative");
  c.horizon = horizon ? horizon : c.instance.horizon;
  if (c.horizon && *c.horizon < 1) ThrowInvalid("horizon must be positive");
  return c;
}

DynamicInstance ToDynamic(const Context& c) {
  if (!c.horizon) ThrowInvalid("dynamic models need a horizon (--horizon or instance field)");
  DynamicInstance d;
  d.network = c.instance.network;
  d.horizon = *c.horizon;
  d.gamma = c.gamma;
  return d;
}

struct ModelRun {
  std::string model;
  Rational objective;
  Rational nominal_value;
  Rational robust_value;
  std::vector<Scenario> worst;
  Json report;
  Json flow;
  Json lp;
  double wall_ms = 0;
};

ModelRun RunModel(const Context& c, const PathCatalog& catalog, const std::string& model,
                  bool lex_nominal, bool full_scenarios, lp::Method method) {
  ModelRun run;
  run.model = model;
  const auto start = std::chrono::steady_clock::now();
  const Network& net = c.instance.network;
  if (IsStaticModel(model)) {
    StaticSolveOptions o;
    o.maximize_nominal = lex_nominal;
    o.model.full_scenarios = full_scenarios;
    o.model.guards = c.guards;
    o.lp.method = method;
    StaticResult r = SolveStatic(net, catalog, ParseStaticModel(model), c.gamma, o);
    run.objective = r.objective;
    run.nominal_value = r.report.nominal_value;
    run.robust_value = r.report.robust_value;
    run.worst = r.report.worst_scenarios;
    run.report = StaticReportToJson(net, r.report);
    run.flow = StaticFlowToJson(net, catalog, r.flow);
    run.lp = {{"presolved_rows", r.stats.presolved_rows},
              {"presolved_columns", r.stats.presolved_columns},
              {"certified_basis", r.stats.certified}};
  } else {
    const DynamicInstance d = ToDynamic(c);
    DynamicSolveOptions o;
    o.maximize_nominal = lex_nominal;
    o.model.full_scenarios = full_scenarios;
    o.model.guards = c.guards;
    o.lp.method = method;
    DynamicResult r = SolveDynamic(d, catalog, ParseDynamicModel(model), o);
    run.objective = r.objective;
    run.nominal_value = r.report.nominal_value;
    run.robust_value = r.report.robust_value;
    run.worst = r.report.minimizing_scenarios;
    run.report = DynamicReportToJson(net, r.report);
    run.flow = DynamicFlowToJson(net, catalog, r.flow);
    run.lp = {{"presolved_rows", r.stats.presolved_rows},
              {"presolved_columns", r.stats.presolved_columns},
              {"certified_basis", r.stats.certified}};
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return run;
}

class Output {
 public:
  Output(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}
  void Write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
    } else {
      WriteTextFile(path_, text);
    }
  }
  Json Paths() const { return path_.empty() ? Json::array() : Json::array({path_}); }

 private:
  std::ostream& out_;
  std::string path_;
};

void WriteManifest(const std::string& path, const std::string& command,
                   const std::vector<std::string>& args, Json inputs, Json outputs,
                   Json values) {
  if (path.empty()) return;
  Json m;
  m["command"] = command;
  m["argv"] = args;
  m["inputs"] = std::move(inputs);
  m["outputs"] = std::move(outputs);
  m["values"] = std::move(values);
  WriteTextFile(path, DumpJson(m));
}

Json Optional(const std::optional<int64_t>& v) { return v ? Json(*v) : Json(); }

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust maximum flows under arc failures and delays, solved exactly."};
  app.name("robustflow");
  app.require_subcommand(1);

  // generate
  CLI::App* gen = app.add_subcommand("generate", "Write a generated instance as JSON");
  std::string family;
  std::optional<int64_t> g_gamma, g_beta, g_seed, g_nodes, g_arcs, g_cap, g_tau, g_delay,
      g_horizon;
  std::string g_alpha, g_kind, g_of, g_params, g_out, g_manifest;
  std::vector<int64_t> g_b;
  gen->add_option("family", family,
                  "fig1 | fan | bottleneck | por-static | por-static-scaled | por-dynamic | "
                  "partition | ti-example | random | split")
      ->required();
  gen->add_option("--gamma", g_gamma, "Failure or delay budget");
  gen->add_option("--beta", g_beta, "Bottleneck multiplier");
  gen->add_option("--alpha", g_alpha, "Price-of-robustness target, e.g. 6/5");
  gen->add_option("--b", g_b, "PARTITION values, comma separated")->delimiter(',');
  gen->add_option("--kind", g_kind, "Random kind: dag | general | dynamic");
  gen->add_option("--nodes", g_nodes);
  gen->add_option("--arcs", g_arcs);
  gen->add_option("--max-capacity", g_cap);
  gen->add_option("--max-travel-time", g_tau);
  gen->add_option("--max-delay", g_delay);
  gen->add_option("--horizon", g_horizon);
  gen->add_option("--seed", g_seed);
  gen->add_option("--of", g_of, "Family transformed by 'split'");
  gen->add_option("--params", g_params, "Generator parameters as a JSON object");
  gen->add_option("-o,--out", g_out, "Output file (default: stdout)");
  gen->add_option("--manifest", g_manifest, "Write a run manifest");

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Solve one model exactly");
  std::string s_instance, s_model, s_format = "json", s_out, s_manifest, s_method = "certified";
  std::optional<int> s_gamma;
  std::optional<int64_t> s_horizon;
  bool s_lex = false, s_full = false;
  solve->add_option("--instance", s_instance, "Instance JSON")->required();
  solve->add_option("--model", s_model, "pm | am | gm | gm1 | dpm | dam | dam-compact | dgm | tr")
      ->required();
  solve->add_option("--gamma", s_gamma);
  solve->add_option("--horizon", s_horizon);
  solve->add_flag("--lex-nominal", s_lex, "Among robust optima, maximize the nominal value");
  solve->add_flag("--full-scenarios", s_full, "Enumerate scenarios over all arcs per constraint");
  solve->add_option("--method", s_method, "certified | exact");
  solve->add_option("--format", s_format, "json | csv");
  solve->add_option("-o,--out", s_out);
  solve->add_option("--manifest", s_manifest);

  // compare
  CLI::App* compare = app.add_subcommand("compare", "Solve several models, one CSV row each");
  std::string c_instance, c_out, c_manifest;
  std::vector<std::string> c_models;
  std::optional<int> c_gamma;
  std::optional<int64_t> c_horizon;
  bool c_lex = false, c_no_timing = false;
  compare->add_option("--instance", c_instance)->required();
  compare->add_option("--models", c_models, "Comma separated model names")
      ->delimiter(',')
      ->required();
  compare->add_option("--gamma", c_gamma);
  compare->add_option("--horizon", c_horizon);
  compare->add_flag("--lex-nominal", c_lex);
  compare->add_flag("--no-timing", c_no_timing, "Omit the wall time column values");
  compare->add_option("-o,--out", c_out);
  compare->add_option("--manifest", c_manifest);

  // evaluate
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Check a flow and compute its robust value by enumeration");
  std::string e_instance, e_flow, e_kind, e_out, e_manifest;
  std::optional<int> e_gamma;
  std::optional<int64_t> e_horizon;
  evaluate->add_option("--instance", e_instance)->required();
  evaluate->add_option("--flow", e_flow, "Flow JSON, or a solve result containing one")
      ->required();
  evaluate->add_option("--kind", e_kind, "Override the flow kind");
  evaluate->add_option("--gamma", e_gamma);
  evaluate->add_option("--horizon", e_horizon);
  evaluate->add_option("-o,--out", e_out);
  evaluate->add_option("--manifest", e_manifest);

  // suite
  CLI::App* suite = app.add_subcommand("suite", "Run an invariant or probe suite");
  std::string u_name, u_out, u_manifest;
  SuiteOptions u_opts;
  suite->add_option("name", u_name,
                    "static-invariants | dynamic-invariants | embedding | oracle-equivalence | "
                    "partition-roundtrip | conjecture-probe")
      ->required();
  suite->add_option("--seeds", u_opts.seeds, "Number of seeded instances");
  suite->add_option("--sizes", u_opts.sizes, "Node counts, comma separated")->delimiter(',');
  suite->add_option("--gammas", u_opts.gammas, "Budgets, comma separated")->delimiter(',');
  suite->add_option("--jobs", u_opts.jobs, "Concurrent solves");
  suite->add_option("--base-seed", u_opts.base_seed);
  suite->add_option("-o,--out", u_out);
  suite->add_option("--manifest", u_manifest);

  std::vector<std::string> argv_store = {"robustflow"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      Json params = Json::object();
      if (!g_params.empty()) {
        try {
          params = Json::parse(g_params);
        } catch (const nlohmann::json::exception& e) {
          ThrowInvalid(std::string("--params is not valid JSON: ") + e.what());
        }
      }
      if (g_gamma) params["gamma"] = *g_gamma;
      if (g_beta) params["beta"] = *g_beta;
      if (!g_alpha.empty()) params["alpha"] = g_alpha;
      if (!g_b.empty()) params["b"] = g_b;
      if (!g_kind.empty()) params["kind"] = g_kind;
      if (g_nodes) params["nodes"] = *g_nodes;
      if (g_arcs) params["arcs"] = *g_arcs;
      if (g_cap) params["max_capacity"] = *g_cap;
      if (g_tau) params["max_travel_time"] = *g_tau;
      if (g_delay) params["max_delay"] = *g_delay;
      if (g_horizon) params["horizon"] = *g_horizon;
      if (g_seed) params["seed"] = *g_seed;
      if (family == "split") {
        if (g_of.empty()) ThrowInvalid("split needs --of FAMILY");
        params = {{"of", {{"family", g_of}, {"params", params}}}};
      }
      const InstanceFile inst = GenerateFamily(family, params);
      Output o(out, g_out);
      o.Write(DumpJson(InstanceToJson(inst)));
      WriteManifest(g_manifest, "generate", args, {{"family", family}, {"params", params}},
                    o.Paths(),
                    {{"nodes", inst.network.num_nodes()}, {"arcs", inst.network.num_arcs()}});
      return kExitOk;
    }

    if (solve->parsed()) {
      if (s_format != "json" && s_format != "csv") ThrowInvalid("--format must be json or csv");
      if (s_method != "certified" && s_method != "exact") {
        ThrowInvalid("--method must be certified or exact");
      }
      const Context c = LoadContext(s_instance, s_gamma, s_horizon);
      const bool is_static = IsStaticModel(s_model);
      if (!is_static) ParseDynamicModel(s_model);
      PathCatalog catalog(c.instance.network, c.guards);
      const ModelRun run =
          RunModel(c, catalog, s_model, s_lex, s_full,
                   s_method == "exact" ? lp::Method::kExactTableau : lp::Method::kCertifiedBasis);
      std::string text;
      if (s_format == "json") {
        Json j;
        j["model"] = s_model;
        j["gamma"] = c.gamma;
        if (!is_static) j["horizon"] = *c.horizon;
        j["lex_nominal"] = s_lex;
        j["objective"] = RationalToJson(run.objective);
        j["report"] = run.report;
        j["flow"] = run.flow;
        j["lp"] = run.lp;
        text = DumpJson(j);
      } else {
        std::ostringstream s;
        s << "model,gamma,horizon,objective,nominal_value,robust_value,worst_scenarios,"
             "objective_approx\n";
        s << s_model << "," << c.gamma << "," << (is_static ? "" : std::to_string(*c.horizon))
          << "," << ToString(run.objective) << "," << ToString(run.nominal_value) << ","
          << ToString(run.robust_value) << ","
          << CsvField(ScenarioList(c.instance.network, run.worst)) << ","
          << Approx(run.objective) << "\n";
        text = s.str();
      }
      Output o(out, s_out);
      o.Write(text);
      WriteManifest(s_manifest, "solve", args,
                    {{"instance", s_instance}, {"model", s_model}, {"gamma", c.gamma},
                     {"horizon", Optional(is_static ? std::nullopt : c.horizon)},
                     {"lex_nominal", s_lex}},
                    o.Paths(),
                    {{"objective", ToString(run.objective)},
                     {"nominal_value", ToString(run.nominal_value)}});
      return kExitOk;
    }

    if (compare->parsed()) {
      const Context c = LoadContext(c_instance, c_gamma, c_horizon);
      for (const std::string& m : c_models) {
        if (!IsStaticModel(m)) ParseDynamicModel(m);
      }
      PathCatalog catalog(c.instance.network, c.guards);
      std::ostringstream s;
      s << "model,gamma,horizon,robust_value,nominal_value,worst_scenarios,wall_time_ms,"
           "robust_value_approx\n";
      Json values = Json::object();
      for (const std::string& m : c_models) {
        const ModelRun run =
            RunModel(c, catalog, m, c_lex, false, lp::Method::kCertifiedBasis);
        const bool is_static = IsStaticModel(m);
        std::ostringstream ms;
        ms.precision(3);
        ms << std::fixed << run.wall_ms;
        s << m << "," << c.gamma << "," << (is_static ? "" : std::to_string(*c.horizon)) << ","
          << ToString(run.robust_value) << "," << ToString(run.nominal_value) << ","
          << CsvField(ScenarioList(c.instance.network, run.worst)) << ","
          << (c_no_timing ? "" : ms.str()) << "," << Approx(run.robust_value) << "\n";
        values[m] = ToString(run.robust_value);
      }
      Output o(out, c_out);
      o.Write(s.str());
      WriteManifest(c_manifest, "compare", args,
                    {{"instance", c_instance}, {"models", c_models}, {"gamma", c.gamma},
                     {"horizon", Optional(c.horizon)}, {"lex_nominal", c_lex}},
                    o.Paths(), values);
      return kExitOk;
    }

    if (evaluate->parsed()) {
      const Context c = LoadContext(e_instance, e_gamma, e_horizon);
      PathCatalog catalog(c.instance.network, c.guards);
      Json flow_json = ReadJsonFile(e_flow);
      if (flow_json.is_object() && flow_json.contains("flow") && !flow_json.contains("entries")) {
        flow_json = flow_json.at("flow");
      }
      if (!e_kind.empty() && flow_json.is_object()) flow_json["kind"] = e_kind;
      const FlowFile flow = FlowFromJson(c.instance.network, catalog, flow_json);
      Json j;
      bool feasible;
      Rational robust;
      if (flow.dynamic) {
        const DynamicRobustReport r =
            EvaluateDynamic(ToDynamic(c), catalog, flow.dynamic_flow, c.guards);
        j = DynamicReportToJson(c.instance.network, r);
        feasible = r.feasible();
        robust = r.robust_value;
      } else {
        const RobustReport r =
            EvaluateStatic(c.instance.network, catalog, flow.static_flow, c.gamma, c.guards);
        j = StaticReportToJson(c.instance.network, r);
        feasible = r.feasible();
        robust = r.robust_value;
      }
      Json result;
      result["kind"] = flow_json.at("kind");
      result["dynamic"] = flow.dynamic;
      result["gamma"] = c.gamma;
      if (flow.dynamic) result["horizon"] = *c.horizon;
      for (auto& [k, v] : j.items()) result[k] = v;
      Output o(out, e_out);
      o.Write(DumpJson(result));
      WriteManifest(e_manifest, "evaluate", args,
                    {{"instance", e_instance}, {"flow", e_flow}, {"gamma", c.gamma},
                     {"horizon", Optional(flow.dynamic ? c.horizon : std::nullopt)}},
                    o.Paths(), {{"feasible", feasible}, {"robust_value", ToString(robust)}});
      if (!feasible) {
        err << "flow is infeasible: " << result.at("violations").size() << " violation(s)\n";
        return kExitInfeasibleFlow;
      }
      return kExitOk;
    }

    if (suite->parsed()) {
      u_opts.guards = Guards::FromEnvironment();
      const SuiteReport report = RunSuite(u_name, u_opts);
      Output o(out, u_out);
      o.Write(DumpJson(SuiteReportToJson(report)));
      WriteManifest(u_manifest, "suite", args,
                    {{"suite", u_name}, {"seeds", u_opts.seeds}, {"sizes", u_opts.sizes},
                     {"gammas", u_opts.gammas}, {"base_seed", u_opts.base_seed}},
                    o.Paths(), report.summary);
      if (!report.passed()) {
        for (const SuiteCase& sc : report.cases) {
          if (sc.passed()) continue;
          for (const SuiteCheck& check : sc.checks) {
            if (!check.passed) {
              err << "FAIL " << sc.label << ": " << check.name << ": " << check.detail << "\n";
            }
          }
          if (!sc.counterexample.is_null()) {
            err << "minimized counterexample: " << sc.counterexample.dump() << "\n";
          }
        }
        return kExitInvariant;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
        return kExitBadInput;
      case ErrorCode::kGuardExceeded:
        return kExitGuard;
      case ErrorCode::kInfeasible:
        return kExitInfeasibleFlow;
      case ErrorCode::kInternal:
        return kExitInvariant;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadInput;
}

}  // namespace robustflow
