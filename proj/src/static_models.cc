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

#include "robustflow/static_models.h"

#include <algorithm>

#include "robustflow/errors.h"
#include "robustflow/max_flow.h"

namespace robustflow {

using lp::Relation;
using lp::Term;

std::string FlowKindName(FlowKind kind) {
  switch (kind) {
    case FlowKind::kPath:
      return "path";
    case FlowKind::kArc:
      return "arc";
    case FlowKind::kSubpath:
      return "subpath";
    case FlowKind::kTemporallyRepeated:
      return "temporally-repeated";
  }
  return "?";
}

FlowKind ParseFlowKind(const std::string& name) {
  for (FlowKind k : {FlowKind::kPath, FlowKind::kArc, FlowKind::kSubpath,
                     FlowKind::kTemporallyRepeated}) {
    if (FlowKindName(k) == name) return k;
  }
  ThrowInvalid("unknown flow kind '" + name + "'");
}

std::string StaticModelName(StaticModel model) {
  switch (model) {
    case StaticModel::kPath:
      return "pm";
    case StaticModel::kArc:
      return "am";
    case StaticModel::kGeneral:
      return "gm";
    case StaticModel::kCompactGammaOne:
      return "gm1";
  }
  return "?";
}

Path FlowPath(const Network& network, const PathCatalog& catalog,
              FlowKind kind, int index) {
  switch (kind) {
    case FlowKind::kPath:
    case FlowKind::kTemporallyRepeated:
      if (index < 0 || index >= static_cast<int>(catalog.st_paths().size())) {
        ThrowInvalid("path index " + std::to_string(index) + " out of range");
      }
      return catalog.st_paths()[index];
    case FlowKind::kSubpath:
      if (index < 0 || index >= static_cast<int>(catalog.subpaths().size())) {
        ThrowInvalid("subpath index " + std::to_string(index) + " out of range");
      }
      return catalog.subpaths()[index];
    case FlowKind::kArc: {
      if (index < 0 || index >= network.num_arcs()) {
        ThrowInvalid("arc index " + std::to_string(index) + " out of range");
      }
      Path p;
      p.arcs = {index};
      p.start = network.arc(index).tail;
      p.end = network.arc(index).head;
      return p;
    }
  }
  ThrowInvalid("bad flow kind");
}

namespace {

std::string ScenarioLabel(const Network& network, const Scenario& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.arcs.size(); ++i) {
    if (i > 0) out += ",";
    out += network.arc(s.arcs[i]).id;
  }
  return out + "}";
}

std::string PathLabel(const Network& network, const Path& p) {
  return "[" + p.ToString(network) + "]";
}

void RequireGamma(int gamma) {
  if (gamma < 0) ThrowInvalid("gamma must be nonnegative");
}

// Indices among `candidates` whose path meets the scenario.
std::vector<int> Hit(const std::vector<Path>& paths,
                     const std::vector<int>& candidates, const Scenario& s) {
  std::vector<int> out;
  for (int i : candidates) {
    for (int a : paths[i].arcs) {
      if (s.Contains(a)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace

StaticModelLp BuildPathModel(const Network& network, const PathCatalog& catalog,
                             int gamma, const ModelOptions& options) {
  RequireGamma(gamma);
  StaticModelLp m;
  m.kind = FlowKind::kPath;
  const auto& paths = catalog.st_paths();
  std::vector<int> all(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) {
    all[i] = static_cast<int>(i);
    m.flow_var.push_back(
        m.program.AddVariable("x" + PathLabel(network, paths[i])));
  }
  m.epigraph_var = m.program.AddVariable("lambda");
  std::vector<int> universe;
  if (options.full_scenarios) {
    universe = AllArcs(network);
  } else {
    for (int a = 0; a < network.num_arcs(); ++a) {
      if (!catalog.st_paths_through(a).empty()) universe.push_back(a);
    }
  }
  for (const Scenario& s : EnumerateScenarios(universe, gamma, options.guards)) {
    std::vector<Term> terms = {{m.epigraph_var, 1}};
    for (int i : Hit(paths, all, s)) terms.push_back({m.flow_var[i], -1});
    m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                            "loss" + ScenarioLabel(network, s));
  }
  for (int a = 0; a < network.num_arcs(); ++a) {
    if (catalog.st_paths_through(a).empty()) continue;
    std::vector<Term> terms;
    for (int i : catalog.st_paths_through(a)) terms.push_back({m.flow_var[i], 1});
    m.program.AddConstraint(std::move(terms), Relation::kLessEqual,
                            network.arc(a).capacity, "cap[" + network.arc(a).id + "]");
  }
  std::vector<Term> objective;
  for (int v : m.flow_var) {
    objective.push_back({v, 1});
    m.nominal_objective.push_back({v, 1});
  }
  objective.push_back({m.epigraph_var, -1});
  m.program.SetObjective(lp::Sense::kMaximize, std::move(objective));
  return m;
}

StaticModelLp BuildArcModel(const Network& network, int gamma,
                            const ModelOptions& options) {
  RequireGamma(gamma);
  RequireValid(network);
  StaticModelLp m;
  m.kind = FlowKind::kArc;
  for (const Arc& arc : network.arcs()) {
    m.flow_var.push_back(m.program.AddVariable("x[" + arc.id + "]"));
  }
  m.epigraph_var = m.program.AddVariable("lambda");
  const int s = network.source(), t = network.sink();
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (v == s || v == t) continue;
    const std::vector<int>& in = network.in_arcs(v);
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(network) : in;
    for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
      std::vector<Term> terms;
      for (int a : in) {
        if (!z.Contains(a)) terms.push_back({m.flow_var[a], 1});
      }
      for (int a : network.out_arcs(v)) terms.push_back({m.flow_var[a], -1});
      m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                              "cons[" + network.node_name(v) + "]" +
                                  ScenarioLabel(network, z));
    }
  }
  const std::vector<int>& into_sink = network.in_arcs(t);
  const std::vector<int> universe =
      options.full_scenarios ? AllArcs(network) : into_sink;
  for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
    std::vector<Term> terms = {{m.epigraph_var, 1}};
    for (int a : into_sink) {
      if (z.Contains(a)) terms.push_back({m.flow_var[a], -1});
    }
    m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                            "loss" + ScenarioLabel(network, z));
  }
  for (int a = 0; a < network.num_arcs(); ++a) {
    m.program.AddConstraint({{m.flow_var[a], 1}}, Relation::kLessEqual,
                            network.arc(a).capacity,
                            "cap[" + network.arc(a).id + "]");
  }
  std::vector<Term> objective;
  for (int a : into_sink) {
    objective.push_back({m.flow_var[a], 1});
    m.nominal_objective.push_back({m.flow_var[a], 1});
  }
  objective.push_back({m.epigraph_var, -1});
  m.program.SetObjective(lp::Sense::kMaximize, std::move(objective));
  return m;
}

StaticModelLp BuildGeneralModel(const Network& network,
                                const PathCatalog& catalog, int gamma,
                                const ModelOptions& options) {
  RequireGamma(gamma);
  StaticModelLp m;
  m.kind = FlowKind::kSubpath;
  const auto& paths = catalog.subpaths();
  for (const Path& p : paths) {
    m.flow_var.push_back(m.program.AddVariable("x" + PathLabel(network, p)));
  }
  m.epigraph_var = m.program.AddVariable("lambda");
  const int s = network.source(), t = network.sink();
  const std::vector<int>& into_sink = catalog.subpaths_ending_at(t);
  {
    const std::vector<int> universe = options.full_scenarios
                                          ? AllArcs(network)
                                          : catalog.ArcsOfSubpaths(into_sink);
    for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
      std::vector<Term> terms = {{m.epigraph_var, 1}};
      for (int i : Hit(paths, into_sink, z)) terms.push_back({m.flow_var[i], -1});
      m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                              "loss" + ScenarioLabel(network, z));
    }
  }
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (v == s || v == t) continue;
    const std::vector<int>& in = catalog.subpaths_ending_at(v);
    const std::vector<int>& out = catalog.subpaths_starting_at(v);
    if (in.empty() && out.empty()) continue;
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(network) : catalog.ArcsOfSubpaths(in);
    for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
      const std::vector<int> hit = Hit(paths, in, z);
      std::vector<Term> terms;
      for (int i : in) {
        if (!std::binary_search(hit.begin(), hit.end(), i)) {
          terms.push_back({m.flow_var[i], 1});
        }
      }
      for (int i : out) terms.push_back({m.flow_var[i], -1});
      m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                              "cons[" + network.node_name(v) + "]" +
                                  ScenarioLabel(network, z));
    }
  }
  for (int a = 0; a < network.num_arcs(); ++a) {
    if (catalog.subpaths_through(a).empty()) continue;
    std::vector<Term> terms;
    for (int i : catalog.subpaths_through(a)) terms.push_back({m.flow_var[i], 1});
    m.program.AddConstraint(std::move(terms), Relation::kLessEqual,
                            network.arc(a).capacity,
                            "cap[" + network.arc(a).id + "]");
  }
  std::vector<Term> objective;
  for (int i : into_sink) {
    objective.push_back({m.flow_var[i], 1});
    m.nominal_objective.push_back({m.flow_var[i], 1});
  }
  objective.push_back({m.epigraph_var, -1});
  m.program.SetObjective(lp::Sense::kMaximize, std::move(objective));
  return m;
}

CompactModelLp BuildCompactGammaOneModel(const Network& network) {
  RequireValid(network);
  CompactModelLp m;
  const int n = network.num_nodes();
  const int s = network.source(), t = network.sink();
  auto y = [&m](int a, int v, int w) { return m.y.at({a, v, w}); };
  for (int a = 0; a < network.num_arcs(); ++a) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        m.y[{a, v, w}] = m.program.AddVariable(
            "y[" + network.arc(a).id + "," + network.node_name(v) + "," +
            network.node_name(w) + "]");
      }
    }
  }
  m.nu = m.program.AddVariable("nu", /*free=*/true);
  // Worst single failure: nu bounds the sink-bound flow through every arc.
  for (int a = 0; a < network.num_arcs(); ++a) {
    std::vector<Term> terms = {{m.nu, -1}};
    for (int v = 0; v < n; ++v) terms.push_back({y(a, v, t), 1});
    m.program.AddConstraint(std::move(terms), Relation::kLessEqual, 0,
                            "nu[" + network.arc(a).id + "]");
  }
  // Robust conservation at inner nodes for every single failing arc.
  for (int vp = 0; vp < n; ++vp) {
    if (vp == s || vp == t) continue;
    for (int failed = 0; failed < network.num_arcs(); ++failed) {
      std::vector<Term> terms;
      for (int a : network.in_arcs(vp)) {
        for (int v = 0; v < n; ++v) terms.push_back({y(a, v, vp), 1});
      }
      for (int v = 0; v < n; ++v) terms.push_back({y(failed, v, vp), -1});
      for (int a : network.out_arcs(vp)) {
        for (int w = 0; w < n; ++w) terms.push_back({y(a, vp, w), -1});
      }
      m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                              "rob[" + network.node_name(vp) + "," +
                                  network.arc(failed).id + "]");
    }
  }
  // Strict conservation of every commodity at nodes other than its ends.
  for (int vp = 0; vp < n; ++vp) {
    if (vp == s || vp == t) continue;
    for (int v = 0; v < n; ++v) {
      if (v == vp) continue;
      for (int w = 0; w < n; ++w) {
        if (w == vp) continue;
        std::vector<Term> terms;
        for (int a : network.in_arcs(vp)) terms.push_back({y(a, v, w), 1});
        for (int a : network.out_arcs(vp)) terms.push_back({y(a, v, w), -1});
        if (terms.empty()) continue;
        m.program.AddConstraint(std::move(terms), Relation::kEqual, 0,
                                "strict[" + network.node_name(vp) + "," +
                                    network.node_name(v) + "," +
                                    network.node_name(w) + "]");
      }
    }
  }
  for (int a = 0; a < network.num_arcs(); ++a) {
    std::vector<Term> terms;
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) terms.push_back({y(a, v, w), 1});
    }
    m.program.AddConstraint(std::move(terms), Relation::kLessEqual,
                            network.arc(a).capacity,
                            "cap[" + network.arc(a).id + "]");
  }
  std::vector<Term> objective = {{m.nu, -1}};
  for (int a : network.in_arcs(t)) {
    for (int v = 0; v < n; ++v) {
      objective.push_back({y(a, v, t), 1});
      m.nominal_objective.push_back({y(a, v, t), 1});
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, std::move(objective));
  return m;
}

namespace {

// Splits an arc flow into walks that start and stop at nodes in `terminal`,
// cancelling cycles through the other nodes. Flow must be conserved at every
// non-terminal node. Leftover flow lies on cycles of non-terminals.
std::vector<WeightedPath> DecomposeBetweenTerminals(const Network& network,
                                                    std::vector<Rational> flow,
                                                    const std::vector<bool>& terminal) {
  const int n = network.num_nodes();
  std::vector<WeightedPath> out;
  auto first_positive = [&](int v) {
    for (int a : network.out_arcs(v)) {
      if (flow[a] > 0) return a;
    }
    return -1;
  };
  for (int x = 0; x < n; ++x) {
    if (!terminal[x]) continue;
    while (first_positive(x) >= 0) {
      std::vector<int> position(n, -1);
      std::vector<int> walk;
      int v = x;
      position[v] = 0;
      bool cancelled = false;
      do {
        const int a = first_positive(v);
        if (a < 0) ThrowInternal("flow is not conserved at a non-terminal node");
        walk.push_back(a);
        const int w = network.arc(a).head;
        if (position[w] >= 0 && !terminal[w]) {
          const std::vector<int> cycle(walk.begin() + position[w], walk.end());
          Rational amount = flow[cycle.front()];
          for (int c : cycle) amount = std::min(amount, flow[c]);
          for (int c : cycle) flow[c] -= amount;
          cancelled = true;
          break;
        }
        position[w] = static_cast<int>(walk.size());
        v = w;
      } while (!terminal[v]);
      if (cancelled) continue;
      Rational amount = flow[walk.front()];
      for (int a : walk) amount = std::min(amount, flow[a]);
      for (int a : walk) flow[a] -= amount;
      out.push_back({walk, x, v, amount});
    }
  }
  return out;
}

}  // namespace

StaticFlow DecomposeCompactSolution(const Network& network,
                                    const PathCatalog& catalog,
                                    const CompactModelLp& model,
                                    const std::vector<Rational>& values) {
  const std::vector<std::string> broken =
      lp::Violations(model.program, values);
  if (!broken.empty()) {
    throw Error(ErrorCode::kInfeasible,
                "compact solution violates " + broken.front());
  }
  StaticFlow flow;
  flow.kind = FlowKind::kSubpath;
  const int n = network.num_nodes();
  const int s = network.source();
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      std::vector<Rational> arc_flow(network.num_arcs(), 0);
      bool any = false;
      for (int a = 0; a < network.num_arcs(); ++a) {
        arc_flow[a] = values[model.y.at({a, v, w})];
        any |= arc_flow[a] > 0;
      }
      if (!any) continue;
      std::vector<bool> terminal(n, false);
      terminal[v] = terminal[w] = terminal[s] = terminal[network.sink()] = true;
      for (WeightedPath& p :
           DecomposeBetweenTerminals(network, std::move(arc_flow), terminal)) {
        if (p.end != w || (p.start != v && p.start != s) || p.start == p.end) {
          continue;
        }
        const int index = catalog.FindSubpath(p.arcs);
        if (index < 0) {
          ThrowInvalid("decomposed path is not part of any source-sink path");
        }
        flow.values[index] += p.value;
      }
    }
  }
  std::erase_if(flow.values, [](const auto& e) { return sgn(e.second) == 0; });
  return flow;
}

RobustReport EvaluateStatic(const Network& network, const PathCatalog& catalog,
                            const StaticFlow& flow, int gamma,
                            const Guards& guards) {
  RequireGamma(gamma);
  if (flow.kind == FlowKind::kTemporallyRepeated) {
    ThrowInvalid("temporally repeated flows are dynamic");
  }
  struct Entry {
    Path path;
    Rational value;
  };
  std::vector<Entry> entries;
  RobustReport report;
  for (const auto& [index, value] : flow.values) {
    Path p = FlowPath(network, catalog, flow.kind, index);
    if (value < 0) {
      report.violations.push_back("negative flow " + ToString(value) + " on " +
                                  PathLabel(network, p));
      continue;
    }
    if (value == 0) continue;
    entries.push_back({std::move(p), value});
  }
  const int s = network.source(), t = network.sink();
  std::vector<Rational> load(network.num_arcs(), 0);
  report.arc_exposure.assign(network.num_arcs(), 0);
  report.nominal_value = 0;
  for (const Entry& e : entries) {
    for (int a : e.path.arcs) {
      load[a] += e.value;
      if (e.path.end == t) report.arc_exposure[a] += e.value;
    }
    if (e.path.end == t) report.nominal_value += e.value;
  }
  for (int a = 0; a < network.num_arcs(); ++a) {
    if (load[a] > network.arc(a).capacity) {
      report.violations.push_back("capacity of " + network.arc(a).id +
                                  ": load " + ToString(load[a]) + " > " +
                                  ToString(network.arc(a).capacity));
    }
  }
  if (flow.kind != FlowKind::kPath) {
    for (int v = 0; v < network.num_nodes(); ++v) {
      if (v == s || v == t) continue;
      Rational inflow = 0, outflow = 0;
      std::vector<int> arriving;
      std::vector<int> universe;
      for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].path.end == v) {
          inflow += entries[i].value;
          arriving.push_back(static_cast<int>(i));
          universe.insert(universe.end(), entries[i].path.arcs.begin(),
                          entries[i].path.arcs.end());
        }
        if (entries[i].path.start == v) outflow += entries[i].value;
      }
      if (outflow == 0) continue;
      // Deletions at v only depend on the arcs of the paths arriving at v.
      for (const Scenario& z : EnumerateScenarios(universe, gamma, guards)) {
        Rational deleted = 0;
        for (int i : arriving) {
          for (int a : entries[i].path.arcs) {
            if (z.Contains(a)) {
              deleted += entries[i].value;
              break;
            }
          }
        }
        if (inflow - deleted < outflow) {
          report.violations.push_back(
              "conservation at " + network.node_name(v) + " under scenario " +
              ScenarioLabel(network, z) + ": inflow " + ToString(inflow) +
              " minus deleted " + ToString(deleted) + " < outflow " +
              ToString(outflow));
          break;
        }
      }
    }
  }
  report.worst_loss = -1;
  for (const Scenario& z : EnumerateScenarios(AllArcs(network), gamma, guards)) {
    Rational loss = 0;
    for (const Entry& e : entries) {
      if (e.path.end != t) continue;
      for (int a : e.path.arcs) {
        if (z.Contains(a)) {
          loss += e.value;
          break;
        }
      }
    }
    if (loss > report.worst_loss) {
      report.worst_loss = loss;
      report.worst_scenarios.clear();
    }
    if (loss == report.worst_loss) report.worst_scenarios.push_back(z);
  }
  report.robust_value = report.nominal_value - report.worst_loss;
  return report;
}

StaticFlow PruneLowIndegree(const Network& network, const PathCatalog& catalog,
                            const StaticFlow& flow, int gamma) {
  RequireGamma(gamma);
  if (flow.kind != FlowKind::kSubpath) {
    ThrowInvalid("pruning applies to subpath flows");
  }
  const RobustReport before = EvaluateStatic(network, catalog, flow, gamma);
  if (!before.feasible()) {
    throw Error(ErrorCode::kInfeasible,
                "input flow is infeasible: " + before.violations.front());
  }
  StaticFlow out = flow;
  for (int w = 0; w < network.num_nodes(); ++w) {
    if (w == network.source() || w == network.sink()) continue;
    if (static_cast<int>(network.in_arcs(w).size()) > gamma) continue;
    for (int i : catalog.subpaths_starting_at(w)) {
      auto it = out.values.find(i);
      if (it != out.values.end() && it->second > 0) {
        throw Error(ErrorCode::kInfeasible,
                    "flow leaves node " + network.node_name(w) +
                        " although all of its inflow can fail");
      }
    }
    for (int i : catalog.subpaths_ending_at(w)) out.values.erase(i);
  }
  return out;
}

StaticResult SolveStatic(const Network& network, const PathCatalog& catalog,
                         StaticModel model, int gamma,
                         const StaticSolveOptions& options) {
  RequireGamma(gamma);
  StaticResult result;
  result.model = model;
  result.gamma = gamma;
  lp::LinearProgram* program = nullptr;
  std::vector<Term> nominal;
  StaticModelLp built;
  CompactModelLp compact;
  switch (model) {
    case StaticModel::kPath:
      built = BuildPathModel(network, catalog, gamma, options.model);
      break;
    case StaticModel::kArc:
      built = BuildArcModel(network, gamma, options.model);
      break;
    case StaticModel::kGeneral:
      built = BuildGeneralModel(network, catalog, gamma, options.model);
      break;
    case StaticModel::kCompactGammaOne:
      if (gamma != 1) ThrowInvalid("the compact model requires gamma = 1");
      compact = BuildCompactGammaOneModel(network);
      break;
  }
  if (model == StaticModel::kCompactGammaOne) {
    program = &compact.program;
    nominal = compact.nominal_objective;
  } else {
    program = &built.program;
    nominal = built.nominal_objective;
  }
  lp::Solution solution;
  if (options.maximize_nominal) {
    lp::LexicographicSolution lex = lp::LexicographicSolve(
        *program, nominal, lp::Sense::kMaximize, options.lp);
    solution = std::move(lex.secondary);
  } else {
    solution = lp::Solve(*program, options.lp);
  }
  if (solution.status != lp::Status::kOptimal) {
    ThrowInternal(StaticModelName(model) + " program is " +
                  lp::StatusName(solution.status));
  }
  result.objective = solution.objective_value;
  result.stats = solution.stats;
  if (model == StaticModel::kCompactGammaOne) {
    result.flow =
        DecomposeCompactSolution(network, catalog, compact, solution.values);
  } else {
    result.flow.kind = built.kind;
    for (size_t i = 0; i < built.flow_var.size(); ++i) {
      const Rational& v = solution.values[built.flow_var[i]];
      if (sgn(v) != 0) result.flow.values[static_cast<int>(i)] = v;
    }
  }
  result.report = EvaluateStatic(network, catalog, result.flow, gamma,
                                 options.model.guards);
  if (!result.report.feasible()) {
    ThrowInternal("optimal flow fails evaluation: " +
                  result.report.violations.front());
  }
  if (result.report.robust_value != result.objective) {
    ThrowInternal("evaluated robust value " +
                  ToString(result.report.robust_value) +
                  " differs from the optimum " + ToString(result.objective));
  }
  return result;
}

}  // namespace robustflow
