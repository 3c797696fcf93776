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

#include "robustflow/suites.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <queue>
#include <random>
#include <thread>

#include "robustflow/errors.h"
#include "robustflow/instances.h"
#include "robustflow/max_flow.h"
#include "robustflow/static_models.h"

namespace robustflow {

bool SuiteCase::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.passed; });
}

bool SuiteReport::passed() const {
  if (suite == "conjecture-probe") return true;
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.passed(); });
}

std::vector<std::string> SuiteNames() {
  return {"static-invariants", "dynamic-invariants", "embedding",
          "oracle-equivalence", "partition-roundtrip", "conjecture-probe"};
}

std::vector<DynamicInstance> RandomDagCorpus(int count, const std::vector<int>& sizes,
                                             int64_t max_capacity, uint64_t base_seed,
                                             int gamma) {
  if (sizes.empty()) ThrowInvalid("corpus sizes must not be empty");
  std::vector<DynamicInstance> out;
  for (int i = 0; i < count; ++i) {
    RandomParams p;
    p.kind = RandomKind::kDag;
    p.nodes = sizes[i % sizes.size()];
    p.arcs = p.nodes <= 2 ? 2 : 2 * (p.nodes - 2) + 2;
    p.max_capacity = max_capacity;
    p.gamma = gamma;
    p.seed = base_seed + static_cast<uint64_t>(i);
    out.push_back(GenRandom(p));
  }
  return out;
}

std::vector<DynamicInstance> RandomDynamicCorpus(int count, const std::vector<int>& sizes,
                                                 uint64_t base_seed) {
  if (sizes.empty()) ThrowInvalid("corpus sizes must not be empty");
  std::vector<DynamicInstance> out;
  for (int i = 0; i < count; ++i) {
    RandomParams p;
    p.kind = RandomKind::kDynamic;
    p.nodes = sizes[i % sizes.size()];
    p.arcs = p.nodes <= 2 ? 2 : 2 * (p.nodes - 2) + 2;
    p.max_capacity = 3;
    p.max_travel_time = 2;
    p.max_delay = 3;
    p.horizon = 3 + i % 4;
    p.gamma = 1 + i % 2;
    p.seed = base_seed + static_cast<uint64_t>(i);
    out.push_back(GenRandom(p));
  }
  return out;
}

Rational BruteForceMinCut(const Network& network) {
  const int n = network.num_nodes();
  if (n > 22) ThrowInvalid("brute-force min cut supports at most 22 nodes");
  const int s = network.source(), t = network.sink();
  std::vector<int> free_nodes;
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) free_nodes.push_back(v);
  }
  std::optional<Rational> best;
  std::vector<bool> side(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << free_nodes.size()); ++mask) {
    std::fill(side.begin(), side.end(), false);
    side[s] = true;
    for (size_t i = 0; i < free_nodes.size(); ++i) side[free_nodes[i]] = mask >> i & 1;
    Rational cut = 0;
    for (const Arc& arc : network.arcs()) {
      if (side[arc.tail] && !side[arc.head]) cut += arc.capacity;
    }
    if (!best || cut < *best) best = cut;
  }
  return *best;
}

std::optional<Network> RemoveArc(const Network& network, int removed) {
  const int n = network.num_nodes();
  std::vector<bool> keep_arc(network.num_arcs(), true);
  keep_arc[removed] = false;
  auto reach = [&](int start, bool forward) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : forward ? network.out_arcs(v) : network.in_arcs(v)) {
        if (!keep_arc[a]) continue;
        const int w = forward ? network.arc(a).head : network.arc(a).tail;
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    return seen;
  };
  const std::vector<bool> from_s = reach(network.source(), true);
  const std::vector<bool> to_t = reach(network.sink(), false);
  if (!from_s[network.sink()]) return std::nullopt;
  NetworkBuilder b;
  for (int v = 0; v < n; ++v) {
    if (from_s[v] && to_t[v]) b.AddNode(network.node_name(v));
  }
  b.SetSource(network.node_name(network.source()));
  b.SetSink(network.node_name(network.sink()));
  for (int a = 0; a < network.num_arcs(); ++a) {
    const Arc& arc = network.arc(a);
    if (!keep_arc[a] || !from_s[arc.tail] || !to_t[arc.tail] || !from_s[arc.head] ||
        !to_t[arc.head]) {
      continue;
    }
    b.AddArc(arc.id, network.node_name(arc.tail), network.node_name(arc.head), arc.capacity,
             arc.travel_time, arc.delay);
  }
  Network out = b.Build();
  if (!ValidateNetwork(out).ok()) return std::nullopt;
  return out;
}

namespace {

struct CaseSpec {
  std::string label;
  Json params;
  DynamicInstance instance;
  std::vector<int64_t> partition;  // partition-roundtrip cases only
};

using CheckFn = std::function<std::vector<SuiteCheck>(const CaseSpec&, Json* metrics)>;

void Expect(std::vector<SuiteCheck>& out, const std::string& name, bool ok,
            const std::string& detail) {
  out.push_back({name, ok, ok ? "" : detail});
}

std::string Str(const Rational& r) { return ToString(r); }

// Runs `check`, turning exceptions into a failed check.
std::vector<SuiteCheck> Guarded(const CheckFn& check, const CaseSpec& spec, Json* metrics) {
  try {
    return check(spec, metrics);
  } catch (const Error& e) {
    return {{"completes", false, e.what()}};
  } catch (const std::exception& e) {
    return {{"completes", false, e.what()}};
  }
}

std::vector<std::string> FailedNames(const std::vector<SuiteCheck>& checks) {
  std::vector<std::string> out;
  for (const SuiteCheck& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

bool StillFails(const CheckFn& check, const CaseSpec& spec, const std::string& name) {
  Json ignored;
  for (const SuiteCheck& c : Guarded(check, spec, &ignored)) {
    if (!c.passed && c.name == name) return true;
  }
  return false;
}

// Greedy shrinking: drop arcs (or partition values, in pairs of equal parity)
// while the first failing check keeps failing.
Json Shrink(const CheckFn& check, CaseSpec spec, const std::string& name) {
  bool progress = true;
  while (progress) {
    progress = false;
    if (!spec.partition.empty()) {
      const size_t n = spec.partition.size();
      for (size_t i = 0; i < n && !progress; ++i) {
        for (size_t j = i; j < n && !progress; ++j) {
          std::vector<int64_t> b;
          for (size_t k = 0; k < n; ++k) {
            if (k != i && k != j) b.push_back(spec.partition[k]);
          }
          int64_t sum = 0;
          for (int64_t x : b) sum += x;
          if (b.empty() || sum % 2 != 0) continue;
          CaseSpec smaller = spec;
          smaller.partition = b;
          smaller.instance = GenPartition(b);
          if (StillFails(check, smaller, name)) {
            spec = std::move(smaller);
            progress = true;
          }
        }
      }
    } else {
      for (int a = 0; a < spec.instance.network.num_arcs() && !progress; ++a) {
        std::optional<Network> smaller = RemoveArc(spec.instance.network, a);
        if (!smaller) continue;
        CaseSpec candidate = spec;
        candidate.instance.network = *smaller;
        if (StillFails(check, candidate, name)) {
          spec = std::move(candidate);
          progress = true;
        }
      }
    }
  }
  Json out;
  out["check"] = name;
  if (!spec.partition.empty()) out["partition"] = spec.partition;
  InstanceFile file;
  file.network = spec.instance.network;
  file.horizon = spec.instance.horizon;
  file.gamma = spec.instance.gamma;
  out["instance"] = InstanceToJson(file);
  return out;
}

SuiteReport RunCases(const std::string& suite, const std::vector<CaseSpec>& specs,
                     const CheckFn& check, int jobs) {
  SuiteReport report;
  report.suite = suite;
  report.cases.resize(specs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < specs.size(); i = next++) {
      SuiteCase& c = report.cases[i];
      c.label = specs[i].label;
      c.params = specs[i].params;
      c.checks = Guarded(check, specs[i], &c.metrics);
      const std::vector<std::string> failed = FailedNames(c.checks);
      if (!failed.empty() && failed.front() != "completes") {
        c.counterexample = Shrink(check, specs[i], failed.front());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

std::vector<int> Or(const std::vector<int>& v, std::vector<int> fallback) {
  return v.empty() ? fallback : v;
}

CaseSpec Spec(const std::string& label, DynamicInstance instance, Json params = Json()) {
  if (params.is_null()) params = Json::object();
  return {label, std::move(params), std::move(instance), {}};
}

DynamicInstance Static(const Network& net, int gamma) {
  DynamicInstance out;
  out.network = net;
  out.horizon = 1;
  out.gamma = gamma;
  return out;
}

Rational SolveStaticValue(const Network& net, const PathCatalog& catalog, StaticModel model,
                          int gamma, const Guards& guards, bool lex = false,
                          Rational* nominal = nullptr) {
  StaticSolveOptions o;
  o.maximize_nominal = lex;
  o.model.guards = guards;
  StaticResult r = SolveStatic(net, catalog, model, gamma, o);
  if (nominal) *nominal = r.report.nominal_value;
  return r.objective;
}

Rational SolveDynamicValue(const DynamicInstance& inst, const PathCatalog& catalog,
                           DynamicModel model, const Guards& guards,
                           DynamicResult* full = nullptr) {
  DynamicSolveOptions o;
  o.model.guards = guards;
  DynamicResult r = SolveDynamic(inst, catalog, model, o);
  if (full) *full = r;
  return r.objective;
}

// ---------------------------------------------------------------------------

SuiteReport StaticInvariants(const SuiteOptions& opt) {
  const std::vector<int> sizes = Or(opt.sizes, {5, 6, 7, 8});
  const std::vector<int> gammas = Or(opt.gammas, {1, 2});
  std::vector<CaseSpec> specs;
  specs.push_back(Spec("fig1", Static(GenFig1(), 1)));
  int i = 0;
  for (const DynamicInstance& inst : RandomDagCorpus(opt.seeds, sizes, 4, opt.base_seed, 1)) {
    for (int g : gammas) {
      DynamicInstance copy = inst;
      copy.gamma = g;
      specs.push_back(Spec("dag seed " + std::to_string(opt.base_seed + i) + " gamma " +
                               std::to_string(g),
                           copy, {{"seed", opt.base_seed + i}, {"gamma", g}}));
    }
    ++i;
  }
  i = 0;
  for (const DynamicInstance& inst : RandomDagCorpus(opt.seeds, sizes, 1, opt.base_seed + 1000, 1)) {
    for (int g : gammas) {
      DynamicInstance copy = inst;
      copy.gamma = g;
      specs.push_back(Spec("unit dag seed " + std::to_string(opt.base_seed + 1000 + i) +
                               " gamma " + std::to_string(g),
                           copy, {{"seed", opt.base_seed + 1000 + i}, {"gamma", g}, {"unit", true}}));
    }
    ++i;
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    std::vector<SuiteCheck> out;
    const Network& net = spec.instance.network;
    const int g = spec.instance.gamma;
    PathCatalog catalog(net, guards);
    const Rational fstar = NominalMaxFlow(net).value;
    const Rational pm = SolveStaticValue(net, catalog, StaticModel::kPath, g, guards);
    const Rational am = SolveStaticValue(net, catalog, StaticModel::kArc, g, guards);
    Rational nominal;
    const Rational gm =
        SolveStaticValue(net, catalog, StaticModel::kGeneral, g, guards, g == 1, &nominal);
    *metrics = {{"pm", Str(pm)}, {"am", Str(am)}, {"gm", Str(gm)}, {"f*", Str(fstar)}};
    Expect(out, "gm>=pm", gm >= pm, "gm " + Str(gm) + " < pm " + Str(pm));
    Expect(out, "gm>=am", gm >= am, "gm " + Str(gm) + " < am " + Str(am));
    Expect(out, "gm<=f*", gm <= fstar, "gm " + Str(gm) + " > f* " + Str(fstar));
    if (g == 1) {
      const Rational gm1 = SolveStaticValue(net, catalog, StaticModel::kCompactGammaOne, 1, guards);
      Expect(out, "gm1=gm", gm1 == gm, "gm1 " + Str(gm1) + " != gm " + Str(gm));
      Expect(out, "lex-nominal=f*", nominal == fstar,
             "nominal " + Str(nominal) + " != f* " + Str(fstar));
      Expect(out, "gm<=2pm", gm <= 2 * pm, "gm " + Str(gm) + " > 2 pm " + Str(2 * pm));
      Expect(out, "am<=2pm", am <= 2 * pm, "am " + Str(am) + " > 2 pm " + Str(2 * pm));
    }
    bool unit = true;
    for (const Arc& a : net.arcs()) unit = unit && a.capacity == 1;
    if (unit) {
      Rational expected = fstar - g;
      if (expected < 0) expected = 0;
      Expect(out, "unit-formula", gm == expected,
             "gm " + Str(gm) + " != max(C - gamma, 0) = " + Str(expected));
    }
    bool integral = true;
    for (const Arc& a : net.arcs()) integral = integral && IsIntegral(a.capacity);
    if (integral && net.num_arcs() <= 14) {
      const Network split = SplitCapacities(net);
      PathCatalog split_catalog(split, guards);
      const Rational gs = SolveStaticValue(split, split_catalog, StaticModel::kGeneral, g, guards);
      Expect(out, "split-invariance", gs == gm,
             "gm(split) " + Str(gs) + " != gm " + Str(gm));
    }
    const Rational pm0 = SolveStaticValue(net, catalog, StaticModel::kPath, 0, guards);
    const Rational am0 = SolveStaticValue(net, catalog, StaticModel::kArc, 0, guards);
    const Rational gm0 = SolveStaticValue(net, catalog, StaticModel::kGeneral, 0, guards);
    Expect(out, "gamma0=f*", pm0 == fstar && am0 == fstar && gm0 == fstar,
           "gamma 0 optima " + Str(pm0) + ", " + Str(am0) + ", " + Str(gm0) + " vs f* " +
               Str(fstar));
    return out;
  };
  return RunCases("static-invariants", specs, check, opt.jobs);
}

SuiteReport DynamicInvariants(const SuiteOptions& opt) {
  const std::vector<int> sizes = Or(opt.sizes, {4, 5, 6});
  std::vector<CaseSpec> specs;
  specs.push_back(Spec("ti-example", GenTiExample()));
  int i = 0;
  for (const DynamicInstance& inst : RandomDynamicCorpus(opt.seeds, sizes, opt.base_seed)) {
    specs.push_back(Spec("dynamic seed " + std::to_string(opt.base_seed + i), inst,
                         {{"seed", opt.base_seed + i}}));
    ++i;
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    std::vector<SuiteCheck> out;
    const DynamicInstance& inst = spec.instance;
    PathCatalog catalog(inst.network, guards);
    DynamicResult dpm_full;
    const Rational dpm = SolveDynamicValue(inst, catalog, DynamicModel::kPath, guards, &dpm_full);
    const Rational dam = SolveDynamicValue(inst, catalog, DynamicModel::kArc, guards);
    const Rational dgm = SolveDynamicValue(inst, catalog, DynamicModel::kGeneral, guards);
    const Rational tr = SolveDynamicValue(inst, catalog, DynamicModel::kTemporallyRepeated, guards);
    const Rational compact = SolveDynamicValue(inst, catalog, DynamicModel::kArcCompact, guards);
    const Rational fstar = NominalDynamicMaxFlow(inst);
    *metrics = {{"dpm", Str(dpm)}, {"dam", Str(dam)}, {"dgm", Str(dgm)},
                {"tr", Str(tr)},   {"dam-compact", Str(compact)}, {"f*", Str(fstar)}};
    Expect(out, "dgm>=dpm", dgm >= dpm, "dgm " + Str(dgm) + " < dpm " + Str(dpm));
    Expect(out, "dgm>=dam", dgm >= dam, "dgm " + Str(dgm) + " < dam " + Str(dam));
    Expect(out, "tr<=dpm", tr <= dpm, "tr " + Str(tr) + " > dpm " + Str(dpm));
    Expect(out, "dam-compact=dam", compact == dam,
           "dam-compact " + Str(compact) + " != dam " + Str(dam));
    Expect(out, "dgm>0<=>dpm>0", (sgn(dgm) > 0) == (sgn(dpm) > 0),
           "dgm " + Str(dgm) + ", dpm " + Str(dpm));
    const bool arrives = dpm_full.report.earliest_arrival.has_value() &&
                         *dpm_full.report.earliest_arrival <= inst.horizon;
    // Only this direction holds: a positive robust value can be reached with
    // arrival times that differ between scenarios.
    Expect(out, "earliest-arrival", !arrives || sgn(dpm_full.report.robust_value) > 0,
           "dpm " + Str(dpm) + " with earliest arrival " +
               (dpm_full.report.earliest_arrival
                    ? std::to_string(*dpm_full.report.earliest_arrival)
                    : std::string("inf")));
    const Rational nominal_lp = lp::Solve(BuildNominalDynamicModel(inst).program).objective_value;
    Expect(out, "nominal-lp=time-expanded", nominal_lp == fstar,
           "nominal LP " + Str(nominal_lp) + " != time-expanded " + Str(fstar));
    DynamicInstance empty = inst;
    empty.gamma = 0;
    const Rational dpm0 = SolveDynamicValue(empty, catalog, DynamicModel::kPath, guards);
    const Rational dam0 = SolveDynamicValue(empty, catalog, DynamicModel::kArc, guards);
    const Rational dgm0 = SolveDynamicValue(empty, catalog, DynamicModel::kGeneral, guards);
    const Rational tr0 = SolveDynamicValue(empty, catalog, DynamicModel::kTemporallyRepeated, guards);
    Expect(out, "gamma0=f*", dpm0 == fstar && dam0 == fstar && dgm0 == fstar && tr0 <= fstar,
           "gamma 0 optima dpm " + Str(dpm0) + ", dam " + Str(dam0) + ", dgm " + Str(dgm0) +
               ", tr " + Str(tr0) + " vs f* " + Str(fstar));
    return out;
  };
  return RunCases("dynamic-invariants", specs, check, opt.jobs);
}

SuiteReport Embedding(const SuiteOptions& opt) {
  const std::vector<int> sizes = Or(opt.sizes, {5, 6, 7});
  const std::vector<int> gammas = Or(opt.gammas, {1, 2});
  std::vector<CaseSpec> specs;
  specs.push_back(Spec("fig1", Static(GenFig1(), 1)));
  specs.push_back(Spec("fan 2", Static(GenFan(2), 2)));
  specs.push_back(Spec("bottleneck 1 2", Static(GenBottleneck(1, 2), 1)));
  int i = 0;
  for (const DynamicInstance& inst : RandomDagCorpus(opt.seeds, sizes, 3, opt.base_seed, 1)) {
    DynamicInstance copy = inst;
    copy.gamma = gammas[i % gammas.size()];
    specs.push_back(Spec("dag seed " + std::to_string(opt.base_seed + i), copy,
                         {{"seed", opt.base_seed + i}, {"gamma", copy.gamma}}));
    ++i;
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    std::vector<SuiteCheck> out;
    const Network& net = spec.instance.network;
    const int g = spec.instance.gamma;
    PathCatalog catalog(net, guards);
    const DynamicInstance embedded = EmbedStatic(net, g);
    PathCatalog dyn_catalog(embedded.network, guards);
    const std::pair<StaticModel, DynamicModel> pairs[] = {
        {StaticModel::kPath, DynamicModel::kPath},
        {StaticModel::kArc, DynamicModel::kArc},
        {StaticModel::kGeneral, DynamicModel::kGeneral}};
    *metrics = Json::object();
    for (const auto& [sm, dm] : pairs) {
      const Rational s = SolveStaticValue(net, catalog, sm, g, guards);
      const Rational d = SolveDynamicValue(embedded, dyn_catalog, dm, guards);
      (*metrics)[StaticModelName(sm)] = Str(s);
      (*metrics)[DynamicModelName(dm)] = Str(d);
      Expect(out, StaticModelName(sm) + "=" + DynamicModelName(dm), s == d,
             StaticModelName(sm) + " " + Str(s) + " != " + DynamicModelName(dm) + " " + Str(d));
    }
    return out;
  };
  return RunCases("embedding", specs, check, opt.jobs);
}

SuiteReport OracleEquivalence(const SuiteOptions& opt) {
  const std::vector<int> sizes = Or(opt.sizes, {5, 6, 7, 8});
  std::vector<CaseSpec> specs;
  specs.push_back(Spec("fig1", Static(GenFig1(), 1), {{"kind", "static"}}));
  int i = 0;
  for (const DynamicInstance& inst : RandomDagCorpus(opt.seeds, sizes, 4, opt.base_seed, 1)) {
    specs.push_back(Spec("dag seed " + std::to_string(opt.base_seed + i), inst,
                         {{"kind", "static"}, {"seed", opt.base_seed + i}}));
    ++i;
  }
  specs.push_back(Spec("ti-example", GenTiExample(), {{"kind", "dynamic"}}));
  std::vector<int> dyn_sizes;
  for (int s : sizes) dyn_sizes.push_back(std::min(s, 6));
  i = 0;
  for (const DynamicInstance& inst : RandomDynamicCorpus(opt.seeds, dyn_sizes, opt.base_seed)) {
    specs.push_back(Spec("dynamic seed " + std::to_string(opt.base_seed + i), inst,
                         {{"kind", "dynamic"}, {"seed", opt.base_seed + i}}));
    ++i;
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    std::vector<SuiteCheck> out;
    const DynamicInstance& inst = spec.instance;
    const Network& net = inst.network;
    PathCatalog catalog(net, guards);
    if (spec.params.value("kind", "") == "static") {
      const Rational gm = SolveStaticValue(net, catalog, StaticModel::kGeneral, 1, guards);
      const CompactModelLp compact = BuildCompactGammaOneModel(net);
      const lp::Solution sol = lp::Solve(compact.program);
      Expect(out, "gm1=gm", sol.objective_value == gm,
             "gm1 " + Str(sol.objective_value) + " != gm " + Str(gm));
      const StaticFlow decomposed = DecomposeCompactSolution(net, catalog, compact, sol.values);
      const RobustReport report = EvaluateStatic(net, catalog, decomposed, 1, guards);
      Expect(out, "gm1-decomposition", report.feasible() && report.robust_value == gm,
             report.feasible() ? "decomposed robust value " + Str(report.robust_value)
                               : report.violations.front());
      const Rational cut = BruteForceMinCut(net);
      const Rational flow = NominalMaxFlow(net).value;
      Expect(out, "max-flow=min-cut", cut == flow,
             "max flow " + Str(flow) + " != min cut " + Str(cut));
      lp::SolveOptions exact;
      exact.method = lp::Method::kExactTableau;
      const StaticModelLp general = BuildGeneralModel(net, catalog, 2);
      const Rational certified = lp::Solve(general.program).objective_value;
      const Rational tableau = lp::Solve(general.program, exact).objective_value;
      Expect(out, "certified=exact-tableau", certified == tableau,
             "certified " + Str(certified) + " != exact tableau " + Str(tableau));
      ModelOptions full;
      full.full_scenarios = true;
      full.guards = guards;
      const Rational gm_full = lp::Solve(BuildGeneralModel(net, catalog, 1, full).program)
                                   .objective_value;
      Expect(out, "restricted=full-scenarios", gm_full == gm,
             "full-scenario gm " + Str(gm_full) + " != gm " + Str(gm));
      *metrics = {{"gm", Str(gm)}, {"f*", Str(flow)}};
    } else {
      const Rational dam = SolveDynamicValue(inst, catalog, DynamicModel::kArc, guards);
      const Rational compact = SolveDynamicValue(inst, catalog, DynamicModel::kArcCompact, guards);
      Expect(out, "dam-compact=dam", compact == dam,
             "dam-compact " + Str(compact) + " != dam " + Str(dam));
      const Rational expanded = NominalDynamicMaxFlow(inst);
      const Rational nominal_lp = lp::Solve(BuildNominalDynamicModel(inst).program).objective_value;
      Expect(out, "nominal-lp=time-expanded", nominal_lp == expanded,
             "nominal LP " + Str(nominal_lp) + " != time-expanded " + Str(expanded));
      ModelOptions full;
      full.full_scenarios = true;
      full.guards = guards;
      const std::pair<std::string, DynamicModelLp> builds[] = {
          {"dpm", BuildDynamicPathModel(inst, catalog, full)},
          {"dam", BuildDynamicArcModel(inst, full)},
          {"dgm", BuildDynamicGeneralModel(inst, catalog, full)},
          {"tr", BuildTemporallyRepeatedModel(inst, catalog, full)}};
      const DynamicModel models[] = {DynamicModel::kPath, DynamicModel::kArc,
                                     DynamicModel::kGeneral, DynamicModel::kTemporallyRepeated};
      *metrics = {{"dam", Str(dam)}, {"f*", Str(expanded)}};
      for (size_t k = 0; k < 4; ++k) {
        const Rational restricted = SolveDynamicValue(inst, catalog, models[k], guards);
        const Rational with_full = lp::Solve(builds[k].second.program).objective_value;
        Expect(out, builds[k].first + " restricted=full-scenarios", restricted == with_full,
               "restricted " + Str(restricted) + " != full " + Str(with_full));
      }
    }
    return out;
  };
  return RunCases("oracle-equivalence", specs, check, opt.jobs);
}

void Multisets(int n, int64_t max_value, int64_t min_value, std::vector<int64_t>& current,
               std::vector<std::vector<int64_t>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  for (int64_t v = min_value; v <= max_value; ++v) {
    current.push_back(v);
    Multisets(n, max_value, v, current, out);
    current.pop_back();
  }
}

std::string Join(const std::vector<int64_t>& b) {
  std::string s;
  for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s;
}

SuiteReport PartitionRoundtrip(const SuiteOptions& opt) {
  const int max_n = opt.sizes.empty() ? 4 : *std::max_element(opt.sizes.begin(), opt.sizes.end());
  const int64_t max_value = 4;
  std::vector<std::vector<int64_t>> all;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int64_t> current;
    Multisets(n, max_value, 1, current, all);
  }
  std::vector<CaseSpec> specs;
  for (const std::vector<int64_t>& b : all) {
    int64_t sum = 0;
    for (int64_t x : b) sum += x;
    if (sum % 2 != 0) continue;
    CaseSpec spec = Spec("b=(" + Join(b) + ")", GenPartition(b), {{"b", b}});
    spec.partition = b;
    specs.push_back(std::move(spec));
  }
  // Seeded multisets of size up to 5 with values up to 4.
  std::mt19937_64 rng(opt.base_seed);
  for (int k = 0; k < opt.seeds; ++k) {
    std::vector<int64_t> b;
    const int n = 2 + static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j) b.push_back(1 + static_cast<int64_t>(rng() % 4));
    int64_t sum = 0;
    for (int64_t x : b) sum += x;
    if (sum % 2 != 0) ++b.back();
    std::sort(b.begin(), b.end());
    CaseSpec spec = Spec("seeded b=(" + Join(b) + ")", GenPartition(b),
                         {{"b", b}, {"seed", opt.base_seed + k}});
    spec.partition = b;
    specs.push_back(std::move(spec));
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    std::vector<SuiteCheck> out;
    PathCatalog catalog(spec.instance.network, guards);
    const bool yes = BruteForcePartition(spec.partition);
    const Rational dpm = SolveDynamicValue(spec.instance, catalog, DynamicModel::kPath, guards);
    const Rational dgm = SolveDynamicValue(spec.instance, catalog, DynamicModel::kGeneral, guards);
    *metrics = {{"partition", yes ? "YES" : "NO"}, {"dpm", Str(dpm)}, {"dgm", Str(dgm)}};
    Expect(out, "dpm>0<=>YES", (sgn(dpm) > 0) == yes,
           "dpm " + Str(dpm) + " but PARTITION is " + (yes ? "YES" : "NO"));
    Expect(out, "dgm>0<=>YES", (sgn(dgm) > 0) == yes,
           "dgm " + Str(dgm) + " but PARTITION is " + (yes ? "YES" : "NO"));
    return out;
  };
  return RunCases("partition-roundtrip", specs, check, opt.jobs);
}

SuiteReport ConjectureProbe(const SuiteOptions& opt) {
  const std::vector<int> sizes = Or(opt.sizes, {5, 6, 7, 8});
  const std::vector<int> gammas = Or(opt.gammas, {1, 2});
  std::vector<CaseSpec> specs;
  for (int g : gammas) {
    for (int beta = 1; beta <= 6; ++beta) {
      specs.push_back(Spec("bottleneck gamma " + std::to_string(g) + " beta " +
                               std::to_string(beta),
                           Static(GenBottleneck(g, beta), g),
                           {{"family", "bottleneck"}, {"gamma", g}, {"beta", beta}}));
    }
  }
  int i = 0;
  for (const DynamicInstance& inst : RandomDagCorpus(opt.seeds, sizes, 4, opt.base_seed, 1)) {
    for (int g : gammas) {
      DynamicInstance copy = inst;
      copy.gamma = g;
      specs.push_back(Spec("dag seed " + std::to_string(opt.base_seed + i) + " gamma " +
                               std::to_string(g),
                           copy, {{"family", "random"}, {"seed", opt.base_seed + i}, {"gamma", g}}));
    }
    ++i;
  }
  const Guards guards = opt.guards;
  CheckFn check = [guards](const CaseSpec& spec, Json* metrics) {
    const Network& net = spec.instance.network;
    const int g = spec.instance.gamma;
    PathCatalog catalog(net, guards);
    const Rational pm = SolveStaticValue(net, catalog, StaticModel::kPath, g, guards);
    const Rational gm = SolveStaticValue(net, catalog, StaticModel::kGeneral, g, guards);
    *metrics = {{"pm", Str(pm)}, {"gm", Str(gm)}, {"bound", g + 1}};
    if (sgn(pm) > 0) {
      const Rational ratio = gm / pm;
      (*metrics)["ratio"] = Str(ratio);
      (*metrics)["ratio_approx"] = ToDouble(ratio);
      (*metrics)["within_bound"] = ratio <= g + 1;
    } else {
      (*metrics)["ratio"] = sgn(gm) > 0 ? "inf" : "undefined";
      (*metrics)["within_bound"] = sgn(gm) == 0;
    }
    return std::vector<SuiteCheck>{};
  };
  SuiteReport report = RunCases("conjecture-probe", specs, check, opt.jobs);
  Json by_gamma = Json::object();
  for (int g : gammas) {
    std::optional<Rational> best;
    std::string where;
    bool within = true;
    Json series = Json::array();
    for (const SuiteCase& c : report.cases) {
      if (c.params.value("gamma", -1) != g || c.metrics.is_null()) continue;
      within = within && c.metrics.value("within_bound", true);
      const std::string ratio = c.metrics.value("ratio", "undefined");
      if (ratio == "undefined" || ratio == "inf") continue;
      const Rational r = ParseRational(ratio);
      if (!best || r > *best) {
        best = r;
        where = c.label;
      }
      if (c.params.value("family", "") == "bottleneck") {
        series.push_back({{"beta", c.params.at("beta")}, {"ratio", ratio}});
      }
    }
    by_gamma[std::to_string(g)] = {{"bound", g + 1},
                                   {"max_ratio", best ? Str(*best) : "undefined"},
                                   {"max_ratio_approx", best ? ToDouble(*best) : 0.0},
                                   {"attained_by", where},
                                   {"within_bound", within},
                                   {"bottleneck_series", series}};
  }
  report.summary = {{"per_gamma", by_gamma}};
  return report;
}

}  // namespace

SuiteReport RunSuite(const std::string& name, const SuiteOptions& options) {
  if (options.seeds < 0) ThrowInvalid("--seeds must be nonnegative");
  for (int s : options.sizes) {
    if (s < 2) ThrowInvalid("--sizes entries must be at least 2");
  }
  for (int g : options.gammas) {
    if (g < 0) ThrowInvalid("gammas must be nonnegative");
  }
  SuiteReport report;
  if (name == "static-invariants") {
    report = StaticInvariants(options);
  } else if (name == "dynamic-invariants") {
    report = DynamicInvariants(options);
  } else if (name == "embedding") {
    report = Embedding(options);
  } else if (name == "oracle-equivalence") {
    report = OracleEquivalence(options);
  } else if (name == "partition-roundtrip") {
    report = PartitionRoundtrip(options);
  } else if (name == "conjecture-probe") {
    report = ConjectureProbe(options);
  } else {
    ThrowInvalid("unknown suite '" + name + "'");
  }
  int failed = 0;
  for (const SuiteCase& c : report.cases) failed += c.passed() ? 0 : 1;
  if (report.summary.is_null()) report.summary = Json::object();
  report.summary["cases"] = report.cases.size();
  report.summary["failed_cases"] = failed;
  report.summary["passed"] = report.passed();
  return report;
}

Json SuiteReportToJson(const SuiteReport& report) {
  Json out;
  out["suite"] = report.suite;
  out["summary"] = report.summary;
  Json cases = Json::array();
  for (const SuiteCase& c : report.cases) {
    Json j;
    j["label"] = c.label;
    j["params"] = c.params;
    j["passed"] = c.passed();
    Json checks = Json::array();
    for (const SuiteCheck& k : c.checks) {
      Json cj = {{"name", k.name}, {"passed", k.passed}};
      if (!k.passed) cj["detail"] = k.detail;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (!c.metrics.is_null()) j["metrics"] = c.metrics;
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    cases.push_back(std::move(j));
  }
  out["cases"] = std::move(cases);
  return out;
}

}  // namespace robustflow
