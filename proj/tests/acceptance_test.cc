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

// Acceptance criteria 1-16. Prints one PASS/FAIL line per criterion.
//
//   acceptance_test          run every criterion
//   acceptance_test 4 7      run the listed criteria
//
// Exits 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "robustflow/dynamic_models.h"
#include "robustflow/errors.h"
#include "robustflow/instances.h"
#include "robustflow/max_flow.h"
#include "robustflow/network.h"
#include "robustflow/paths.h"
#include "robustflow/rational.h"
#include "robustflow/static_models.h"
#include "robustflow/suites.h"

namespace robustflow {
namespace {

// Collects failures for one criterion.
class Outcome {
 public:
  void Expect(bool condition, const std::string& message) {
    ++checks_;
    if (!condition && failures_.size() < 8) failures_.push_back(message);
    if (!condition) ++failed_;
  }
  void Note(const std::string& note) { notes_.push_back(note); }
  bool passed() const { return failed_ == 0; }
  std::string Detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failed_ > 0) out << ", " << failed_ << " failed";
    for (const std::string& n : notes_) out << "; " << n;
    for (const std::string& f : failures_) out << "\n    " << f;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string S(const Rational& q) { return ToString(q); }

Rational StaticValue(const Network& net, int gamma, StaticModel model,
                     const StaticSolveOptions& options = {}) {
  const PathCatalog catalog(net);
  return SolveStatic(net, catalog, model, gamma, options).objective;
}

Rational DynamicValue(const DynamicInstance& inst, DynamicModel model) {
  const PathCatalog catalog(inst.network);
  return SolveDynamic(inst, catalog, model).objective;
}

Rational LexNominal(const Network& net, int gamma, StaticModel model) {
  const PathCatalog catalog(net);
  StaticSolveOptions options;
  options.maximize_nominal = true;
  return SolveStatic(net, catalog, model, gamma, options).report.nominal_value;
}

Rational LexNominal(const DynamicInstance& inst, DynamicModel model) {
  const PathCatalog catalog(inst.network);
  DynamicSolveOptions options;
  options.maximize_nominal = true;
  return SolveDynamic(inst, catalog, model, options).report.nominal_value;
}

struct StaticCase {
  std::string label;
  Network network;
  int gamma;
};

struct DynamicCase {
  std::string label;
  DynamicInstance instance;
};

std::string Join(const std::vector<int64_t>& b) {
  std::string out;
  for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out;
}

// Shared corpora.

std::vector<DynamicInstance> DagCorpus() {
  return RandomDagCorpus(20, {5, 6, 7, 8}, 4, 1, 1);
}

std::vector<Network> UnitCorpus() {
  std::vector<Network> out;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    RandomParams p;
    p.kind = RandomKind::kGeneral;
    p.nodes = 5 + static_cast<int>(seed % 3);
    p.arcs = 2 * p.nodes;
    p.max_capacity = 1;
    p.seed = 100 + seed;
    out.push_back(GenRandom(p).network);
  }
  return out;
}

std::vector<Network> SplitCorpus() {
  std::vector<Network> out = {GenFig1()};
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    RandomParams p;
    p.kind = RandomKind::kDag;
    p.nodes = 4 + static_cast<int>(seed % 2);
    p.arcs = p.nodes + 2;
    p.max_capacity = 3;
    p.seed = 200 + seed;
    out.push_back(GenRandom(p).network);
  }
  return out;
}

std::vector<DynamicInstance> DynamicCorpus() {
  return RandomDynamicCorpus(20, {4, 5, 6}, 1);
}

std::vector<std::vector<int64_t>> PartitionCorpus() {
  std::vector<std::vector<int64_t>> out;
  std::function<void(int, int64_t, std::vector<int64_t>&)> grow =
      [&](int left, int64_t min, std::vector<int64_t>& current) {
        if (left == 0) {
          int64_t sum = 0;
          for (int64_t x : current) sum += x;
          if (sum % 2 == 0) out.push_back(current);
          return;
        }
        for (int64_t x = min; x <= 4; ++x) {
          current.push_back(x);
          grow(left - 1, x, current);
          current.pop_back();
        }
      };
  for (int n = 1; n <= 4; ++n) {
    std::vector<int64_t> current;
    grow(n, 1, current);
  }
  std::mt19937_64 rng(2026);
  for (int k = 0; k < 10; ++k) {
    std::vector<int64_t> b;
    const int n = 3 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) b.push_back(1 + static_cast<int64_t>(rng() % 4));
    int64_t sum = 0;
    for (int64_t x : b) sum += x;
    if (sum % 2 != 0) ++b.back();
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  return out;
}

std::vector<std::pair<int, Rational>> StaticPorCases() {
  return {{2, Rational(6, 5)}, {3, Rational(5, 4)}};
}

std::vector<std::pair<int, Rational>> DynamicPorCases() {
  return {{1, Rational(3, 2)}, {2, Rational(2)}};
}

std::vector<StaticCase> EmbeddingCases() {
  return {{"fig1", GenFig1(), 1},
          {"fan(2)", GenFan(2), 2},
          {"bottleneck(1,2)", GenBottleneck(1, 2), 1}};
}

// Criteria.

void Criterion1(Outcome& out) {
  const Network net = GenFig1();
  const Rational pm = StaticValue(net, 1, StaticModel::kPath);
  const Rational am = StaticValue(net, 1, StaticModel::kArc);
  const Rational gm = StaticValue(net, 1, StaticModel::kGeneral);
  const Rational fstar = NominalMaxFlow(net).value;
  out.Expect(pm == Rational(3, 2), "pm " + S(pm) + " != 3/2");
  out.Expect(am == Rational(4, 3), "am " + S(am) + " != 4/3");
  out.Expect(gm == 2, "gm " + S(gm) + " != 2");
  out.Expect(fstar == 3, "f* " + S(fstar) + " != 3");
  out.Note("pm=" + S(pm) + " am=" + S(am) + " gm=" + S(gm) + " f*=" + S(fstar));
}

void Criterion2(Outcome& out) {
  for (int g = 1; g <= 3; ++g) {
    const Network net = GenFan(g);
    const Rational pm = StaticValue(net, g, StaticModel::kPath);
    const Rational am = StaticValue(net, g, StaticModel::kArc);
    const Rational gm = StaticValue(net, g, StaticModel::kGeneral);
    const std::string at = "gamma " + std::to_string(g) + ": ";
    out.Expect(pm == 1, at + "pm " + S(pm) + " != 1");
    out.Expect(gm == 1, at + "gm " + S(gm) + " != 1");
    out.Expect(am == 0, at + "am " + S(am) + " != 0");
  }
}

void Criterion3(Outcome& out) {
  for (int g = 1; g <= 2; ++g) {
    for (int beta = 1; beta <= 3; ++beta) {
      const Network net = GenBottleneck(g, beta);
      const Rational eta = beta * (g * g + g);
      const Rational pm = StaticValue(net, g, StaticModel::kPath);
      const Rational am = StaticValue(net, g, StaticModel::kArc);
      const Rational gm = StaticValue(net, g, StaticModel::kGeneral);
      const std::string at =
          "gamma " + std::to_string(g) + " beta " + std::to_string(beta) + ": ";
      out.Expect(am == eta - g, at + "am " + S(am) + " != " + S(eta - g));
      out.Expect(gm == eta - g, at + "gm " + S(gm) + " != " + S(eta - g));
      out.Expect(pm == eta / (g + 1), at + "pm " + S(pm));
      const Rational expected_ratio = Rational(g + 1) - Rational(1, beta);
      out.Expect(sgn(pm) > 0 && Rational(gm / pm) == expected_ratio,
                 at + "ratio " + S(gm / pm) + " != " + S(expected_ratio));
    }
  }
}

void Criterion4(Outcome& out) {
  std::vector<Network> nets = {GenFig1()};
  for (const DynamicInstance& inst : DagCorpus()) nets.push_back(inst.network);
  for (size_t i = 0; i < nets.size(); ++i) {
    const Network& net = nets[i];
    const PathCatalog catalog(net);
    const Rational gm = SolveStatic(net, catalog, StaticModel::kGeneral, 1).objective;
    const CompactModelLp compact = BuildCompactGammaOneModel(net);
    const lp::Solution solution = lp::Solve(compact.program);
    const std::string at = "instance " + std::to_string(i) + ": ";
    out.Expect(solution.status == lp::Status::kOptimal, at + "compact LP not optimal");
    if (solution.status != lp::Status::kOptimal) continue;
    out.Expect(solution.objective_value == gm,
               at + "gm1 " + S(solution.objective_value) + " != gm " + S(gm));
    const StaticFlow flow = DecomposeCompactSolution(net, catalog, compact, solution.values);
    const RobustReport report = EvaluateStatic(net, catalog, flow, 1);
    out.Expect(report.feasible(), at + "decomposed flow infeasible");
    out.Expect(report.robust_value == solution.objective_value,
               at + "decomposed robust value " + S(report.robust_value) + " != " +
                   S(solution.objective_value));
  }
}

void Criterion5(Outcome& out) {
  int i = 0;
  for (const DynamicInstance& inst : DagCorpus()) {
    const Rational fstar = NominalMaxFlow(inst.network).value;
    const Rational nominal = LexNominal(inst.network, 1, StaticModel::kGeneral);
    out.Expect(nominal == fstar, "dag " + std::to_string(i) + ": lexicographic nominal " +
                                     S(nominal) + " != f* " + S(fstar));
    ++i;
  }
}

void Criterion6(Outcome& out) {
  int i = 0;
  for (const DynamicInstance& inst : DagCorpus()) {
    const Rational pm = StaticValue(inst.network, 1, StaticModel::kPath);
    const Rational am = StaticValue(inst.network, 1, StaticModel::kArc);
    const Rational gm = StaticValue(inst.network, 1, StaticModel::kGeneral);
    const std::string at = "dag " + std::to_string(i++) + ": ";
    out.Expect(gm <= 2 * pm, at + "gm " + S(gm) + " > 2 pm " + S(pm));
    out.Expect(am <= 2 * pm, at + "am " + S(am) + " > 2 pm " + S(pm));
  }
}

void Criterion7(Outcome& out) {
  int i = 0;
  for (const Network& net : UnitCorpus()) {
    const Rational cut = BruteForceMinCut(net);
    for (int g = 1; g <= 3; ++g) {
      const Rational gm = StaticValue(net, g, StaticModel::kGeneral);
      const Rational expected = std::max(Rational(cut - g), Rational(0));
      out.Expect(gm == expected, "unit graph " + std::to_string(i) + " gamma " +
                                     std::to_string(g) + ": gm " + S(gm) +
                                     " != max(C - gamma, 0) = " + S(expected));
    }
    ++i;
  }
}

void Criterion8(Outcome& out) {
  int i = 0;
  for (const Network& net : SplitCorpus()) {
    const Rational gm = StaticValue(net, 1, StaticModel::kGeneral);
    const Rational split = StaticValue(SplitCapacities(net), 1, StaticModel::kGeneral);
    out.Expect(gm == split, "instance " + std::to_string(i) + ": gm " + S(gm) +
                                " != split gm " + S(split));
    ++i;
  }
}

void Criterion9(Outcome& out) {
  for (const auto& [g, alpha] : StaticPorCases()) {
    const PorStaticInstance por = GenPorStatic(g, alpha);
    for (const Network* net : {&por.rational, &por.scaled}) {
      const Rational fstar = NominalMaxFlow(*net).value;
      for (StaticModel model : {StaticModel::kPath, StaticModel::kGeneral}) {
        const Rational nominal = LexNominal(*net, g, model);
        const std::string at = "gamma " + std::to_string(g) + " " +
                               (net == &por.rational ? "rational " : "scaled ") +
                               StaticModelName(model) + ": ";
        out.Expect(sgn(nominal) > 0 && Rational(fstar / nominal) == alpha,
                   at + "f*/nominal " + S(fstar) + "/" + S(nominal) + " != " + S(alpha));
      }
    }
  }
}

void Criterion10(Outcome& out) {
  std::vector<DynamicInstance> instances = {GenTiExample()};
  for (DynamicInstance& inst : DynamicCorpus()) instances.push_back(std::move(inst));
  for (size_t i = 0; i < instances.size(); ++i) {
    const Rational dam = DynamicValue(instances[i], DynamicModel::kArc);
    const Rational compact = DynamicValue(instances[i], DynamicModel::kArcCompact);
    out.Expect(dam == compact, "instance " + std::to_string(i) + ": dam-compact " +
                                   S(compact) + " != dam " + S(dam));
  }
}

void Criterion11(Outcome& out) {
  const DynamicInstance ti = GenTiExample();
  const PathCatalog catalog(ti.network);
  for (DynamicModel model : {DynamicModel::kPath, DynamicModel::kArc, DynamicModel::kGeneral}) {
    const Rational value = SolveDynamic(ti, catalog, model).objective;
    out.Expect(value == 2, DynamicModelName(model) + " " + S(value) + " != 2");
  }
  const Rational tr = SolveDynamic(ti, catalog, DynamicModel::kTemporallyRepeated).objective;
  out.Expect(tr == Rational(3, 2), "tr " + S(tr) + " != 3/2");

  // One unit per step on a1 and a4, one half per step on a2 and a3.
  DynamicFlow flow;
  flow.kind = FlowKind::kArc;
  for (int64_t theta = 1; theta <= ti.horizon; ++theta) {
    for (const auto& [id, value] :
         std::vector<std::pair<std::string, Rational>>{
             {"a1", 1}, {"a4", 1}, {"a2", Rational(1, 2)}, {"a3", Rational(1, 2)}}) {
      flow.values[{*ti.network.FindArc(id), theta}] = value;
    }
  }
  const DynamicRobustReport report = EvaluateDynamic(ti, catalog, flow);
  out.Expect(report.feasible(), "explicit flow infeasible");
  out.Expect(report.robust_value == Rational(3, 2),
             "explicit flow robust value " + S(report.robust_value) + " != 3/2");
}

void Criterion12(Outcome& out) {
  int yes_count = 0;
  for (const std::vector<int64_t>& b : PartitionCorpus()) {
    const DynamicInstance inst = GenPartition(b);
    const bool yes = BruteForcePartition(b);
    yes_count += yes;
    const Rational dpm = DynamicValue(inst, DynamicModel::kPath);
    const Rational dgm = DynamicValue(inst, DynamicModel::kGeneral);
    const std::string at = "b=(" + Join(b) + ") is " + (yes ? "YES" : "NO") + ": ";
    out.Expect((sgn(dpm) > 0) == yes, at + "dpm " + S(dpm));
    out.Expect((sgn(dgm) > 0) == yes, at + "dgm " + S(dgm));
  }
  out.Note(std::to_string(PartitionCorpus().size()) + " multisets, " +
           std::to_string(yes_count) + " YES");
}

void Criterion13(Outcome& out) {
  for (const auto& [g, alpha] : DynamicPorCases()) {
    const PorDynamicInstance por = GenPorDynamic(g, alpha);
    const Rational fstar = NominalDynamicMaxFlow(por.scaled);
    for (DynamicModel model : {DynamicModel::kPath, DynamicModel::kGeneral}) {
      const Rational nominal = LexNominal(por.scaled, model);
      out.Expect(sgn(nominal) > 0 && Rational(fstar / nominal) == alpha,
                 "gamma " + std::to_string(g) + " " + DynamicModelName(model) +
                     ": f*/nominal " + S(fstar) + "/" + S(nominal) + " != " + S(alpha));
    }
  }
}

void Criterion14(Outcome& out) {
  for (const StaticCase& c : EmbeddingCases()) {
    const DynamicInstance embedded = EmbedStatic(c.network, c.gamma);
    const std::vector<std::pair<StaticModel, DynamicModel>> pairs = {
        {StaticModel::kPath, DynamicModel::kPath},
        {StaticModel::kArc, DynamicModel::kArc},
        {StaticModel::kGeneral, DynamicModel::kGeneral}};
    for (const auto& [sm, dm] : pairs) {
      const Rational s = StaticValue(c.network, c.gamma, sm);
      const Rational d = DynamicValue(embedded, dm);
      out.Expect(s == d, c.label + ": " + StaticModelName(sm) + " " + S(s) + " != " +
                             DynamicModelName(dm) + " " + S(d));
    }
  }
}

std::vector<StaticCase> TouchedStatic() {
  std::vector<StaticCase> out = {{"fig1", GenFig1(), 1}};
  for (int g = 1; g <= 3; ++g) out.push_back({"fan", GenFan(g), g});
  for (int g = 1; g <= 2; ++g) {
    for (int beta = 1; beta <= 3; ++beta) {
      out.push_back({"bottleneck", GenBottleneck(g, beta), g});
    }
  }
  for (const DynamicInstance& inst : DagCorpus()) out.push_back({"dag", inst.network, 1});
  for (const Network& net : UnitCorpus()) {
    for (int g = 1; g <= 3; ++g) out.push_back({"unit", net, g});
  }
  for (const Network& net : SplitCorpus()) {
    out.push_back({"split source", net, 1});
    out.push_back({"split", SplitCapacities(net), 1});
  }
  for (const auto& [g, alpha] : StaticPorCases()) {
    out.push_back({"static por", GenPorStatic(g, alpha).scaled, g});
  }
  for (const StaticCase& c : EmbeddingCases()) out.push_back(c);
  return out;
}

std::vector<DynamicCase> TouchedDynamic() {
  std::vector<DynamicCase> out = {{"ti", GenTiExample()}};
  for (const DynamicInstance& inst : DynamicCorpus()) out.push_back({"dynamic", inst});
  for (const std::vector<int64_t>& b : PartitionCorpus()) {
    out.push_back({"partition (" + Join(b) + ")", GenPartition(b)});
  }
  for (const auto& [g, alpha] : DynamicPorCases()) {
    out.push_back({"dynamic por", GenPorDynamic(g, alpha).scaled});
  }
  for (const StaticCase& c : EmbeddingCases()) {
    out.push_back({"embedded " + c.label, EmbedStatic(c.network, c.gamma)});
  }
  return out;
}

void Criterion15(Outcome& out) {
  for (const StaticCase& c : TouchedStatic()) {
    const PathCatalog catalog(c.network);
    const Rational pm = SolveStatic(c.network, catalog, StaticModel::kPath, c.gamma).objective;
    const Rational am = SolveStatic(c.network, catalog, StaticModel::kArc, c.gamma).objective;
    const Rational gm =
        SolveStatic(c.network, catalog, StaticModel::kGeneral, c.gamma).objective;
    out.Expect(gm >= pm && gm >= am, c.label + " gamma " + std::to_string(c.gamma) +
                                         ": gm " + S(gm) + ", pm " + S(pm) + ", am " + S(am));
  }
  for (const DynamicCase& c : TouchedDynamic()) {
    const PathCatalog catalog(c.instance.network);
    const Rational dpm = SolveDynamic(c.instance, catalog, DynamicModel::kPath).objective;
    const Rational dam = SolveDynamic(c.instance, catalog, DynamicModel::kArc).objective;
    const Rational dgm = SolveDynamic(c.instance, catalog, DynamicModel::kGeneral).objective;
    const Rational tr =
        SolveDynamic(c.instance, catalog, DynamicModel::kTemporallyRepeated).objective;
    out.Expect(dgm >= dpm && dgm >= dam && tr <= dpm,
               c.label + ": dgm " + S(dgm) + ", dpm " + S(dpm) + ", dam " + S(dam) +
                   ", tr " + S(tr));
  }
}

void Criterion16(Outcome& out) {
  std::map<int, Rational> worst;
  for (const StaticCase& c : TouchedStatic()) {
    const PathCatalog catalog(c.network);
    const Rational pm = SolveStatic(c.network, catalog, StaticModel::kPath, c.gamma).objective;
    const Rational gm =
        SolveStatic(c.network, catalog, StaticModel::kGeneral, c.gamma).objective;
    const std::string at = c.label + " gamma " + std::to_string(c.gamma) + ": ";
    if (sgn(pm) == 0) {
      out.Expect(sgn(gm) == 0, at + "gm " + S(gm) + " with pm 0");
      continue;
    }
    const Rational ratio = gm / pm;
    out.Expect(ratio <= c.gamma + 1, at + "gm/pm " + S(ratio) + " > gamma + 1");
    if (!worst.contains(c.gamma) || ratio > worst[c.gamma]) worst[c.gamma] = ratio;
  }
  for (int g = 1; g <= 2; ++g) {
    Rational previous = 0;
    std::string series;
    for (int beta = 1; beta <= 6; ++beta) {
      const Network net = GenBottleneck(g, beta);
      const Rational ratio = StaticValue(net, g, StaticModel::kGeneral) /
                             StaticValue(net, g, StaticModel::kPath);
      out.Expect(ratio > previous && ratio < g + 1,
                 "bottleneck gamma " + std::to_string(g) + " beta " +
                     std::to_string(beta) + ": ratio " + S(ratio));
      previous = ratio;
      series += (beta > 1 ? "," : "") + S(ratio);
    }
    out.Note("bottleneck gamma " + std::to_string(g) + " ratios " + series);
  }
  for (const auto& [g, r] : worst) {
    out.Note("max gm/pm at gamma " + std::to_string(g) + " = " + S(r));
  }
}

struct Criterion {
  int number;
  const char* title;
  void (*run)(Outcome&);
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "figure 1 values", Criterion1},
      {2, "fan family", Criterion2},
      {3, "bottleneck family", Criterion3},
      {4, "one-failure compact program and decomposition", Criterion4},
      {5, "one-failure nominal optimality", Criterion5},
      {6, "one-failure DAG gap bound", Criterion6},
      {7, "unit capacity formula", Criterion7},
      {8, "capacity split invariance", Criterion8},
      {9, "static price of robustness", Criterion9},
      {10, "compact dual arc model", Criterion10},
      {11, "temporally increasing example", Criterion11},
      {12, "PARTITION round trip", Criterion12},
      {13, "dynamic price of robustness", Criterion13},
      {14, "static embedding", Criterion14},
      {15, "relaxation orderings", Criterion15},
      {16, "conjecture probe", Criterion16},
  };
  return criteria;
}

}  // namespace
}  // namespace robustflow

int main(int argc, char** argv) {
  using robustflow::Criteria;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_passed = true;
  for (const auto& c : Criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.number) == selected.end()) {
      continue;
    }
    robustflow::Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed &= outcome.passed();
    std::cout << (outcome.passed() ? "PASS" : "FAIL") << " criterion " << c.number << " ("
              << c.title << ", " << std::fixed << std::setprecision(2) << seconds
              << " s): " << outcome.Detail() << std::endl;
  }
  return all_passed ? 0 : 1;
}
