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

// Static robust flow models under a budget of at most `gamma` failing arcs.
//
//   path model     flow on source-sink paths; a failing arc removes the flow
//                  of every path through it.
//   arc model      flow on arcs; every node must keep weak conservation after
//                  any admissible failure of its incoming arcs.
//   general model  flow on subpaths of source-sink paths, with path deletion
//                  semantics and robust conservation at every inner node.
//
// Every builder enumerates scenarios per constraint, over the arcs that can
// influence that constraint only. ModelOptions::full_scenarios enumerates
// every arc subset instead, for cross-checking.

#ifndef ROBUSTFLOW_STATIC_MODELS_H_
#define ROBUSTFLOW_STATIC_MODELS_H_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "robustflow/lp.h"
#include "robustflow/network.h"
#include "robustflow/paths.h"

namespace robustflow {

enum class FlowKind { kPath, kArc, kSubpath, kTemporallyRepeated };

std::string FlowKindName(FlowKind kind);
FlowKind ParseFlowKind(const std::string& name);

// Values indexed by st-path index (kPath), arc index (kArc) or subpath index
// (kSubpath) of the owning PathCatalog / Network. Zero entries are absent.
struct StaticFlow {
  FlowKind kind = FlowKind::kSubpath;
  std::map<int, Rational> values;
};

struct ModelOptions {
  bool full_scenarios = false;
  Guards guards;
};

struct StaticModelLp {
  lp::LinearProgram program;
  FlowKind kind = FlowKind::kSubpath;
  std::vector<int> flow_var;  // flow index -> variable
  int epigraph_var = -1;
  // Inflow into the sink; the secondary objective of lexicographic solves.
  std::vector<lp::Term> nominal_objective;
};

StaticModelLp BuildPathModel(const Network& network, const PathCatalog& catalog,
                             int gamma, const ModelOptions& options = {});
StaticModelLp BuildArcModel(const Network& network, int gamma,
                            const ModelOptions& options = {});
StaticModelLp BuildGeneralModel(const Network& network,
                                const PathCatalog& catalog, int gamma,
                                const ModelOptions& options = {});

// Polynomial-size program for the general model with one failing arc.
// Variable y(a, v, w) carries the flow on arc a that belongs to subpaths
// from v to w.
struct CompactModelLp {
  lp::LinearProgram program;
  std::map<std::tuple<int, int, int>, int> y;  // (arc, start, end) -> var
  int nu = -1;
  std::vector<lp::Term> nominal_objective;
};

CompactModelLp BuildCompactGammaOneModel(const Network& network);

// Splits every commodity y(., v, w) of a feasible point into simple paths,
// keeps the paths that end at w and start at v or at the source, and drops
// cycles and stray pieces. Throws when a kept path is not a subpath of a
// source-sink path (cannot happen on acyclic networks).
StaticFlow DecomposeCompactSolution(const Network& network,
                                    const PathCatalog& catalog,
                                    const CompactModelLp& model,
                                    const std::vector<Rational>& values);

struct RobustReport {
  Rational nominal_value;
  Rational robust_value;
  Rational worst_loss;
  std::vector<Scenario> worst_scenarios;  // every maximizer, enumeration order
  std::vector<Rational> arc_exposure;     // per arc: sink-bound flow through it
  std::vector<std::string> violations;

  bool feasible() const { return violations.empty(); }
};

// Independent of any LP: checks capacities and (for arc and subpath flows)
// robust conservation, and finds the worst deletion by enumerating every
// scenario over all arcs.
RobustReport EvaluateStatic(const Network& network, const PathCatalog& catalog,
                            const StaticFlow& flow, int gamma,
                            const Guards& guards = {});

// For every inner node w with at most `gamma` incoming arcs, the adversary
// can cut all of w's inflow, so a feasible flow cannot leave w. Verifies that
// and removes the flow on subpaths ending at such nodes.
StaticFlow PruneLowIndegree(const Network& network, const PathCatalog& catalog,
                            const StaticFlow& flow, int gamma);

enum class StaticModel { kPath, kArc, kGeneral, kCompactGammaOne };

std::string StaticModelName(StaticModel model);  // pm, am, gm, gm1

struct StaticSolveOptions {
  bool maximize_nominal = false;
  ModelOptions model;
  lp::SolveOptions lp;
};

struct StaticResult {
  StaticModel model = StaticModel::kGeneral;
  int gamma = 0;
  Rational objective;  // LP optimum
  StaticFlow flow;
  RobustReport report;
  lp::SolveStats stats;
};

StaticResult SolveStatic(const Network& network, const PathCatalog& catalog,
                         StaticModel model, int gamma,
                         const StaticSolveOptions& options = {});

// The path behind a flow index; an arc flow index denotes a one-arc path.
// Throws Error(kInvalidArgument) for an out-of-range index.
Path FlowPath(const Network& network, const PathCatalog& catalog,
              FlowKind kind, int index);

}  // namespace robustflow

#endif  // ROBUSTFLOW_STATIC_MODELS_H_
