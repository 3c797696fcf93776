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

#include "robustflow/dynamic_models.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "robustflow/errors.h"
#include "robustflow/max_flow.h"

namespace robustflow {

using lp::Relation;
using lp::Term;

void RequireValid(const DynamicInstance& instance) {
  RequireValid(instance.network);
  if (instance.horizon < 1) ThrowInvalid("horizon must be at least 1");
  if (instance.gamma < 0) ThrowInvalid("gamma must be nonnegative");
}

std::string DynamicModelName(DynamicModel model) {
  switch (model) {
    case DynamicModel::kPath:
      return "dpm";
    case DynamicModel::kArc:
      return "dam";
    case DynamicModel::kArcCompact:
      return "dam-compact";
    case DynamicModel::kGeneral:
      return "dgm";
    case DynamicModel::kTemporallyRepeated:
      return "tr";
  }
  return "?";
}

int64_t PathDelay(const Network& network, const Path& path, const Scenario& z) {
  int64_t total = 0;
  for (int a : path.arcs) {
    if (z.Contains(a)) total += network.arc(a).delay;
  }
  return total;
}

int64_t EntryTimeAtArc(const Network& network, const Path& path,
                       size_t position, int64_t theta, const Scenario& z) {
  for (size_t i = 0; i < position; ++i) {
    const Arc& arc = network.arc(path.arcs[i]);
    theta -= arc.travel_time + (z.Contains(path.arcs[i]) ? arc.delay : 0);
  }
  return theta;
}

int64_t EntryTime(const Network& network, const Path& path, int64_t theta,
                  const Scenario& z) {
  return theta - TravelTime(network, path) - PathDelay(network, path, z);
}

int64_t ArcEntryTime(const Network& network, int arc, int64_t theta,
                     const Scenario& z) {
  const Arc& a = network.arc(arc);
  return theta - a.travel_time - (z.Contains(arc) ? a.delay : 0);
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

// Adds rows to a program, skipping exact repeats.
class RowAdder {
 public:
  explicit RowAdder(lp::LinearProgram* program) : program_(program) {}

  void Add(std::vector<std::pair<int, int>> terms, Relation relation,
           const Rational& rhs, const std::string& name) {
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto& t : terms) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const auto& t) { return t.second == 0; });
    if (!seen_.emplace(static_cast<int>(relation), ToString(rhs), merged).second) {
      return;
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (const auto& [var, coef] : merged) out.push_back({var, coef});
    program_->AddConstraint(std::move(out), relation, rhs, name);
  }

 private:
  lp::LinearProgram* program_;
  std::set<std::tuple<int, std::string, std::vector<std::pair<int, int>>>> seen_;
};

// Arcs that precede `arc` on some of the given paths.
std::vector<int> UpstreamArcs(const std::vector<Path>& paths,
                              const std::vector<int>& through, int arc) {
  std::set<int> out;
  for (int i : through) {
    for (int a : paths[i].arcs) {
      if (a == arc) break;
      out.insert(a);
    }
  }
  return {out.begin(), out.end()};
}

size_t PositionOf(const Path& path, int arc) {
  return static_cast<size_t>(
      std::find(path.arcs.begin(), path.arcs.end(), arc) - path.arcs.begin());
}

std::string TimedName(const std::string& base, int64_t theta) {
  return base + "@" + std::to_string(theta);
}

// Shared builder for the path and general models, which differ in the path
// set and in the conservation rows.
DynamicModelLp BuildPathBased(const DynamicInstance& instance,
                              const PathCatalog& catalog, bool general,
                              const ModelOptions& options) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  const int gamma = instance.gamma;
  const std::vector<Path>& paths = general ? catalog.subpaths() : catalog.st_paths();
  DynamicModelLp m;
  m.kind = general ? FlowKind::kSubpath : FlowKind::kPath;
  std::vector<std::vector<int>> var(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) {
    const std::string base = "x[" + paths[i].ToString(net) + "]";
    for (int64_t theta = 1; theta <= T; ++theta) {
      const int v = m.program.AddVariable(TimedName(base, theta));
      var[i].push_back(v);
      m.flow_var[{static_cast<int>(i), theta}] = v;
    }
  }
  auto x = [&var](int i, int64_t theta) { return var[i][theta - 1]; };
  m.epigraph_var = m.program.AddVariable("w");
  RowAdder rows(&m.program);
  const int t = net.sink();

  std::vector<int> into_sink;
  for (size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].end == t) into_sink.push_back(static_cast<int>(i));
  }
  std::vector<int64_t> travel(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) travel[i] = TravelTime(net, paths[i]);

  // Arrival by T in every scenario.
  {
    std::set<int> arcs;
    for (int i : into_sink) arcs.insert(paths[i].arcs.begin(), paths[i].arcs.end());
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(net) : std::vector<int>(arcs.begin(), arcs.end());
    for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
      std::vector<std::pair<int, int>> terms = {{m.epigraph_var, 1}};
      for (int i : into_sink) {
        const int64_t last = T - travel[i] - PathDelay(net, paths[i], z);
        for (int64_t theta = 1; theta <= last; ++theta) terms.push_back({x(i, theta), -1});
      }
      rows.Add(std::move(terms), Relation::kLessEqual, 0,
               "arrival" + ScenarioLabel(net, z));
    }
  }
  for (int i : into_sink) {
    for (int64_t theta = 1; theta <= T - travel[i]; ++theta) {
      m.nominal_objective.push_back({x(i, theta), 1});
    }
  }

  // Robust conservation at inner nodes.
  if (general) {
    for (int v = 0; v < net.num_nodes(); ++v) {
      if (v == net.source() || v == t) continue;
      const std::vector<int>& in = catalog.subpaths_ending_at(v);
      const std::vector<int>& out = catalog.subpaths_starting_at(v);
      if (out.empty()) continue;
      const std::vector<int> universe =
          options.full_scenarios ? AllArcs(net) : catalog.ArcsOfSubpaths(in);
      for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
        std::vector<int64_t> shift(in.size());
        for (size_t k = 0; k < in.size(); ++k) {
          shift[k] = travel[in[k]] + PathDelay(net, paths[in[k]], z);
        }
        for (int64_t theta = 1; theta <= T; ++theta) {
          std::vector<std::pair<int, int>> terms;
          for (size_t k = 0; k < in.size(); ++k) {
            const int64_t entry = theta - shift[k];
            if (entry >= 1 && entry <= T) terms.push_back({x(in[k], entry), 1});
          }
          for (int i : out) terms.push_back({x(i, theta), -1});
          rows.Add(std::move(terms), Relation::kGreaterEqual, 0,
                   TimedName("cons[" + net.node_name(v) + "]" + ScenarioLabel(net, z),
                             theta));
        }
      }
    }
  }

  // Capacities in every scenario and at every step.
  for (int a = 0; a < net.num_arcs(); ++a) {
    std::vector<int> through;
    for (size_t i = 0; i < paths.size(); ++i) {
      if (paths[i].Contains(a)) through.push_back(static_cast<int>(i));
    }
    if (through.empty()) continue;
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(net) : UpstreamArcs(paths, through, a);
    for (const Scenario& z : EnumerateScenarios(universe, gamma, options.guards)) {
      std::vector<int64_t> offset(through.size());
      for (size_t k = 0; k < through.size(); ++k) {
        const Path& p = paths[through[k]];
        offset[k] = -EntryTimeAtArc(net, p, PositionOf(p, a), 0, z);
      }
      for (int64_t theta = 1; theta <= T; ++theta) {
        std::vector<std::pair<int, int>> terms;
        for (size_t k = 0; k < through.size(); ++k) {
          const int64_t entry = theta - offset[k];
          if (entry >= 1 && entry <= T) terms.push_back({x(through[k], entry), 1});
        }
        if (terms.empty()) continue;
        rows.Add(std::move(terms), Relation::kLessEqual, net.arc(a).capacity,
                 TimedName("cap[" + net.arc(a).id + "]" + ScenarioLabel(net, z), theta));
      }
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, {{m.epigraph_var, 1}});
  return m;
}

}  // namespace

DynamicModelLp BuildDynamicPathModel(const DynamicInstance& instance,
                                     const PathCatalog& catalog,
                                     const ModelOptions& options) {
  return BuildPathBased(instance, catalog, /*general=*/false, options);
}

DynamicModelLp BuildDynamicGeneralModel(const DynamicInstance& instance,
                                        const PathCatalog& catalog,
                                        const ModelOptions& options) {
  return BuildPathBased(instance, catalog, /*general=*/true, options);
}

namespace {

std::vector<std::vector<int>> AddArcTimeVariables(const Network& net, int64_t T,
                                                  DynamicModelLp& m) {
  std::vector<std::vector<int>> var(net.num_arcs());
  for (int a = 0; a < net.num_arcs(); ++a) {
    for (int64_t theta = 1; theta <= T; ++theta) {
      const int v = m.program.AddVariable(TimedName("x[" + net.arc(a).id + "]", theta));
      var[a].push_back(v);
      m.flow_var[{a, theta}] = v;
    }
  }
  return var;
}

}  // namespace

DynamicModelLp BuildDynamicArcModel(const DynamicInstance& instance,
                                    const ModelOptions& options) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  DynamicModelLp m;
  m.kind = FlowKind::kArc;
  const std::vector<std::vector<int>> var = AddArcTimeVariables(net, T, m);
  auto x = [&var](int a, int64_t theta) { return var[a][theta - 1]; };
  m.epigraph_var = m.program.AddVariable("w");
  RowAdder rows(&m.program);
  const int t = net.sink();
  const std::vector<int>& into_sink = net.in_arcs(t);
  {
    const std::vector<int> universe = options.full_scenarios ? AllArcs(net) : into_sink;
    for (const Scenario& z : EnumerateScenarios(universe, instance.gamma, options.guards)) {
      std::vector<std::pair<int, int>> terms = {{m.epigraph_var, 1}};
      for (int a : into_sink) {
        const int64_t last = ArcEntryTime(net, a, T, z);
        for (int64_t theta = 1; theta <= last; ++theta) terms.push_back({x(a, theta), -1});
      }
      rows.Add(std::move(terms), Relation::kLessEqual, 0,
               "arrival" + ScenarioLabel(net, z));
    }
  }
  for (int a : into_sink) {
    for (int64_t theta = 1; theta <= T - net.arc(a).travel_time; ++theta) {
      m.nominal_objective.push_back({x(a, theta), 1});
    }
  }
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == t) continue;
    const std::vector<int>& in = net.in_arcs(v);
    const std::vector<int> universe = options.full_scenarios ? AllArcs(net) : in;
    for (const Scenario& z : EnumerateScenarios(universe, instance.gamma, options.guards)) {
      for (int64_t theta = 1; theta <= T; ++theta) {
        std::vector<std::pair<int, int>> terms;
        for (int a : in) {
          const int64_t entry = ArcEntryTime(net, a, theta, z);
          if (entry >= 1 && entry <= T) terms.push_back({x(a, entry), 1});
        }
        for (int a : net.out_arcs(v)) terms.push_back({x(a, theta), -1});
        rows.Add(std::move(terms), Relation::kGreaterEqual, 0,
                 TimedName("cons[" + net.node_name(v) + "]" + ScenarioLabel(net, z), theta));
      }
    }
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    for (int64_t theta = 1; theta <= T; ++theta) {
      m.program.AddConstraint({{x(a, theta), 1}}, Relation::kLessEqual,
                              net.arc(a).capacity,
                              TimedName("cap[" + net.arc(a).id + "]", theta));
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, {{m.epigraph_var, 1}});
  return m;
}

DynamicModelLp BuildDynamicArcCompactModel(const DynamicInstance& instance) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  const int gamma = instance.gamma;
  const int s = net.source(), t = net.sink();
  DynamicModelLp m;
  m.kind = FlowKind::kArc;
  const std::vector<std::vector<int>> var = AddArcTimeVariables(net, T, m);
  // Zero outside 1..T: such terms are simply omitted.
  auto x_term = [&](int a, int64_t theta, int coef, std::vector<Term>& terms) {
    if (theta >= 1 && theta <= T) terms.push_back({var[a][theta - 1], coef});
  };
  std::map<std::pair<int, int64_t>, int> eta;
  std::map<std::pair<int, int64_t>, int> lambda;
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == s || v == t) continue;
    for (int64_t theta = 1; theta <= T; ++theta) {
      eta[{v, theta}] =
          m.program.AddVariable(TimedName("eta[" + net.node_name(v) + "]", theta));
    }
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    if (net.arc(a).head == t) continue;
    for (int64_t theta = 1; theta <= T; ++theta) {
      lambda[{a, theta}] =
          m.program.AddVariable(TimedName("lambda[" + net.arc(a).id + "]", theta));
    }
  }
  const int mu = m.program.AddVariable("mu");
  std::map<int, int> nu;
  for (int a : net.in_arcs(t)) {
    nu[a] = m.program.AddVariable("nu[" + net.arc(a).id + "]");
  }

  std::vector<Term> objective;
  for (int a : net.in_arcs(t)) {
    for (int64_t theta = 1; theta <= T; ++theta) {
      x_term(a, theta - net.arc(a).travel_time, 1, objective);
    }
    objective.push_back({nu[a], -1});
  }
  m.nominal_objective = objective;
  std::erase_if(m.nominal_objective, [&](const Term& term) { return term.coef < 0; });
  objective.push_back({mu, -gamma});

  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == s || v == t) continue;
    for (int64_t theta = 1; theta <= T; ++theta) {
      std::vector<Term> terms;
      for (int a : net.in_arcs(v)) {
        x_term(a, theta - net.arc(a).travel_time, 1, terms);
        terms.push_back({lambda.at({a, theta}), -1});
      }
      terms.push_back({eta.at({v, theta}), -gamma});
      for (int a : net.out_arcs(v)) x_term(a, theta, -1, terms);
      m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                              TimedName("cons[" + net.node_name(v) + "]", theta));
      for (int a : net.in_arcs(v)) {
        const Arc& arc = net.arc(a);
        std::vector<Term> dual = {{eta.at({v, theta}), 1}, {lambda.at({a, theta}), 1}};
        x_term(a, theta - arc.travel_time, -1, dual);
        x_term(a, theta - arc.travel_time - arc.delay, 1, dual);
        m.program.AddConstraint(std::move(dual), Relation::kGreaterEqual, 0,
                                TimedName("dual[" + net.node_name(v) + "," + arc.id + "]",
                                          theta));
      }
    }
  }
  for (int a : net.in_arcs(t)) {
    const Arc& arc = net.arc(a);
    std::vector<Term> terms = {{mu, 1}, {nu[a], 1}};
    for (int64_t i = 1; i <= arc.delay; ++i) {
      x_term(a, T - arc.travel_time - (i - 1), -1, terms);
    }
    m.program.AddConstraint(std::move(terms), Relation::kGreaterEqual, 0,
                            "late[" + arc.id + "]");
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    for (int64_t theta = 1; theta <= T; ++theta) {
      m.program.AddConstraint({{var[a][theta - 1], 1}}, Relation::kLessEqual,
                              net.arc(a).capacity,
                              TimedName("cap[" + net.arc(a).id + "]", theta));
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, std::move(objective));
  return m;
}

DynamicModelLp BuildTemporallyRepeatedModel(const DynamicInstance& instance,
                                            const PathCatalog& catalog,
                                            const ModelOptions& options) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  const std::vector<Path>& paths = catalog.st_paths();
  DynamicModelLp m;
  m.kind = FlowKind::kTemporallyRepeated;
  std::vector<int> var(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) {
    var[i] = m.program.AddVariable("x[" + paths[i].ToString(net) + "]");
    m.flow_var[{static_cast<int>(i), 0}] = var[i];
  }
  m.epigraph_var = m.program.AddVariable("w");
  RowAdder rows(&m.program);
  std::vector<int64_t> travel(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) travel[i] = TravelTime(net, paths[i]);
  {
    std::set<int> arcs;
    for (const Path& p : paths) arcs.insert(p.arcs.begin(), p.arcs.end());
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(net) : std::vector<int>(arcs.begin(), arcs.end());
    for (const Scenario& z : EnumerateScenarios(universe, instance.gamma, options.guards)) {
      std::vector<std::pair<int, int>> terms = {{m.epigraph_var, 1}};
      for (size_t i = 0; i < paths.size(); ++i) {
        const int64_t steps = T - travel[i] - PathDelay(net, paths[i], z);
        if (steps > 0) terms.push_back({var[i], -static_cast<int>(steps)});
      }
      rows.Add(std::move(terms), Relation::kLessEqual, 0,
               "arrival" + ScenarioLabel(net, z));
    }
  }
  for (size_t i = 0; i < paths.size(); ++i) {
    if (T - travel[i] > 0) m.nominal_objective.push_back({var[i], T - travel[i]});
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    const std::vector<int>& through = catalog.st_paths_through(a);
    if (through.empty()) continue;
    const std::vector<int> universe =
        options.full_scenarios ? AllArcs(net) : UpstreamArcs(paths, through, a);
    for (const Scenario& z : EnumerateScenarios(universe, instance.gamma, options.guards)) {
      std::vector<int64_t> offset(through.size());
      for (size_t k = 0; k < through.size(); ++k) {
        const Path& p = paths[through[k]];
        offset[k] = -EntryTimeAtArc(net, p, PositionOf(p, a), 0, z);
      }
      for (int64_t theta = 1; theta <= T; ++theta) {
        std::vector<std::pair<int, int>> terms;
        for (size_t k = 0; k < through.size(); ++k) {
          const int64_t entry = theta - offset[k];
          if (entry >= 1 && entry <= T) terms.push_back({var[through[k]], 1});
        }
        if (terms.empty()) continue;
        rows.Add(std::move(terms), Relation::kLessEqual, net.arc(a).capacity,
                 TimedName("cap[" + net.arc(a).id + "]" + ScenarioLabel(net, z), theta));
      }
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, {{m.epigraph_var, 1}});
  return m;
}

DynamicModelLp BuildNominalDynamicModel(const DynamicInstance& instance) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  DynamicModelLp m;
  m.kind = FlowKind::kArc;
  const std::vector<std::vector<int>> var = AddArcTimeVariables(net, T, m);
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    for (int64_t theta = 1; theta <= T; ++theta) {
      std::vector<Term> terms;
      for (int a : net.in_arcs(v)) {
        const int64_t entry = theta - net.arc(a).travel_time;
        if (entry >= 1) terms.push_back({var[a][entry - 1], 1});
      }
      for (int a : net.out_arcs(v)) terms.push_back({var[a][theta - 1], -1});
      m.program.AddConstraint(std::move(terms), Relation::kEqual, 0,
                              TimedName("cons[" + net.node_name(v) + "]", theta));
    }
  }
  for (int a = 0; a < net.num_arcs(); ++a) {
    for (int64_t theta = 1; theta <= T; ++theta) {
      m.program.AddConstraint({{var[a][theta - 1], 1}}, Relation::kLessEqual,
                              net.arc(a).capacity,
                              TimedName("cap[" + net.arc(a).id + "]", theta));
    }
  }
  for (int a : net.in_arcs(net.sink())) {
    for (int64_t theta = 1; theta <= T - net.arc(a).travel_time; ++theta) {
      m.nominal_objective.push_back({var[a][theta - 1], 1});
    }
  }
  m.program.SetObjective(lp::Sense::kMaximize, m.nominal_objective);
  return m;
}

DynamicFlow ExpandTemporallyRepeated(const DynamicFlow& flow, int64_t horizon) {
  if (flow.kind != FlowKind::kTemporallyRepeated) return flow;
  DynamicFlow out;
  out.kind = FlowKind::kPath;
  for (const auto& [key, value] : flow.values) {
    if (sgn(value) == 0) continue;
    for (int64_t theta = 1; theta <= horizon; ++theta) {
      out.values[{key.first, theta}] = value;
    }
  }
  return out;
}

DynamicRobustReport EvaluateDynamic(const DynamicInstance& instance,
                                    const PathCatalog& catalog,
                                    const DynamicFlow& input,
                                    const Guards& guards) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  const DynamicFlow flow = ExpandTemporallyRepeated(input, T);
  DynamicRobustReport report;
  struct Entry {
    Path path;
    int64_t theta;
    Rational value;
  };
  std::vector<Entry> entries;
  for (const auto& [key, value] : flow.values) {
    Path p = FlowPath(net, catalog, flow.kind, key.first);
    if (key.second < 1 || key.second > T) {
      ThrowInvalid("flow entry at step " + std::to_string(key.second) +
                   " lies outside 1.." + std::to_string(T));
    }
    if (value < 0) {
      report.violations.push_back("negative flow on [" + p.ToString(net) + "] at step " +
                                  std::to_string(key.second));
      continue;
    }
    if (sgn(value) == 0) continue;
    entries.push_back({std::move(p), key.second, value});
  }
  const bool check_conservation =
      flow.kind == FlowKind::kArc || flow.kind == FlowKind::kSubpath;
  const int n = net.num_nodes();
  const int s = net.source(), t = net.sink();
  const size_t width = static_cast<size_t>(T) + 1;
  std::optional<std::set<int64_t>> common_arrivals;
  bool first = true;
  for (const Scenario& z : EnumerateScenarios(AllArcs(net), instance.gamma, guards)) {
    std::vector<Rational> load(net.num_arcs() * width, 0);
    std::vector<Rational> inflow, outflow;
    if (check_conservation) {
      inflow.assign(n * width, 0);
      outflow.assign(n * width, 0);
    }
    Rational arrived = 0;
    std::set<int64_t> arrival_times;
    for (const Entry& e : entries) {
      int64_t time = e.theta;
      for (int a : e.path.arcs) {
        if (time >= 1 && time <= T) load[a * width + time] += e.value;
        time += net.arc(a).travel_time + (z.Contains(a) ? net.arc(a).delay : 0);
      }
      if (check_conservation && e.path.start != s) {
        outflow[e.path.start * width + e.theta] += e.value;
      }
      if (time > T) continue;
      if (e.path.end == t) {
        arrived += e.value;
        arrival_times.insert(time);
      } else if (check_conservation) {
        inflow[e.path.end * width + time] += e.value;
      }
    }
    for (int a = 0; a < net.num_arcs(); ++a) {
      for (int64_t theta = 1; theta <= T; ++theta) {
        if (load[a * width + theta] > net.arc(a).capacity) {
          report.violations.push_back(
              "capacity of " + net.arc(a).id + " at step " + std::to_string(theta) +
              " under scenario " + ScenarioLabel(net, z) + ": load " +
              ToString(load[a * width + theta]) + " > " + ToString(net.arc(a).capacity));
        }
      }
    }
    if (check_conservation) {
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        for (int64_t theta = 1; theta <= T; ++theta) {
          if (inflow[v * width + theta] < outflow[v * width + theta]) {
            report.violations.push_back(
                "conservation at " + net.node_name(v) + " at step " +
                std::to_string(theta) + " under scenario " + ScenarioLabel(net, z) +
                ": inflow " + ToString(inflow[v * width + theta]) + " < outflow " +
                ToString(outflow[v * width + theta]));
          }
        }
      }
    }
    if (first) report.nominal_value = arrived;
    if (first || arrived < report.robust_value) {
      report.robust_value = arrived;
      report.minimizing_scenarios.clear();
    }
    if (arrived == report.robust_value) report.minimizing_scenarios.push_back(z);
    report.per_scenario_arrival.emplace_back(z, arrived);
    if (!common_arrivals) {
      common_arrivals = arrival_times;
    } else {
      std::set<int64_t> kept;
      std::set_intersection(common_arrivals->begin(), common_arrivals->end(),
                            arrival_times.begin(), arrival_times.end(),
                            std::inserter(kept, kept.begin()));
      common_arrivals = std::move(kept);
    }
    first = false;
  }
  if (common_arrivals && !common_arrivals->empty()) {
    report.earliest_arrival = *common_arrivals->begin();
  }
  return report;
}

Rational NominalDynamicMaxFlow(const DynamicInstance& instance) {
  RequireValid(instance);
  const Network& net = instance.network;
  const int64_t T = instance.horizon;
  const int n = net.num_nodes();
  auto node = [T](int v, int64_t theta) {
    return static_cast<int>(v * T + (theta - 1));
  };
  const int super_source = static_cast<int>(n * T);
  const int super_sink = super_source + 1;
  std::vector<int> tails, heads;
  std::vector<Rational> caps;
  for (int a = 0; a < net.num_arcs(); ++a) {
    const Arc& arc = net.arc(a);
    for (int64_t theta = 1; theta + arc.travel_time <= T; ++theta) {
      tails.push_back(node(arc.tail, theta));
      heads.push_back(node(arc.head, theta + arc.travel_time));
      caps.push_back(arc.capacity);
    }
  }
  Rational out_of_source = 0, into_sink = 0;
  for (int a : net.out_arcs(net.source())) out_of_source += net.arc(a).capacity;
  for (int a : net.in_arcs(net.sink())) into_sink += net.arc(a).capacity;
  for (int64_t theta = 1; theta <= T; ++theta) {
    tails.push_back(super_source);
    heads.push_back(node(net.source(), theta));
    caps.push_back(out_of_source);
    tails.push_back(node(net.sink(), theta));
    heads.push_back(super_sink);
    caps.push_back(into_sink);
  }
  return MaxFlow(super_sink + 1, tails, heads, caps, super_source, super_sink).value;
}

DynamicInstance EmbedStatic(const Network& network, int gamma) {
  if (gamma < 0) ThrowInvalid("gamma must be nonnegative");
  std::vector<Arc> arcs = network.arcs();
  for (Arc& arc : arcs) {
    arc.travel_time = 0;
    arc.delay = 1;
  }
  DynamicInstance out;
  out.network = Network(network.nodes(), std::move(arcs), network.source(),
                        network.sink());
  out.horizon = 1;
  out.gamma = gamma;
  return out;
}

DynamicResult SolveDynamic(const DynamicInstance& instance,
                           const PathCatalog& catalog, DynamicModel model,
                           const DynamicSolveOptions& options) {
  RequireValid(instance);
  DynamicModelLp built;
  switch (model) {
    case DynamicModel::kPath:
      built = BuildDynamicPathModel(instance, catalog, options.model);
      break;
    case DynamicModel::kArc:
      built = BuildDynamicArcModel(instance, options.model);
      break;
    case DynamicModel::kArcCompact:
      built = BuildDynamicArcCompactModel(instance);
      break;
    case DynamicModel::kGeneral:
      built = BuildDynamicGeneralModel(instance, catalog, options.model);
      break;
    case DynamicModel::kTemporallyRepeated:
      built = BuildTemporallyRepeatedModel(instance, catalog, options.model);
      break;
  }
  lp::Solution solution;
  if (options.maximize_nominal) {
    lp::LexicographicSolution lex = lp::LexicographicSolve(
        built.program, built.nominal_objective, lp::Sense::kMaximize, options.lp);
    solution = std::move(lex.secondary);
  } else {
    solution = lp::Solve(built.program, options.lp);
  }
  if (solution.status != lp::Status::kOptimal) {
    ThrowInternal(DynamicModelName(model) + " program is " +
                  lp::StatusName(solution.status));
  }
  DynamicResult result;
  result.model = model;
  result.objective = solution.objective_value;
  result.stats = solution.stats;
  result.flow.kind = built.kind;
  for (const auto& [key, var] : built.flow_var) {
    const Rational& v = solution.values[var];
    if (sgn(v) != 0) result.flow.values[key] = v;
  }
  result.report = EvaluateDynamic(instance, catalog, result.flow, options.model.guards);
  if (!result.report.feasible()) {
    ThrowInternal("optimal flow fails evaluation: " + result.report.violations.front());
  }
  if (result.report.robust_value != result.objective) {
    ThrowInternal("evaluated robust value " + ToString(result.report.robust_value) +
                  " differs from the optimum " + ToString(result.objective));
  }
  return result;
}

}  // namespace robustflow
