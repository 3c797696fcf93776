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

#include "robustflow/instances.h"

#include <algorithm>
#include <limits>
#include <random>

#include "robustflow/errors.h"

namespace robustflow {

namespace {

// Least common multiple of the denominators of `values`.
mpz_class DenominatorLcmOf(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

int64_t ToInt64(const Rational& value) {
  if (!IsIntegral(value) || !value.get_num().fits_slong_p()) {
    ThrowInvalid("value " + ToString(value) + " is not a 64-bit integer");
  }
  return value.get_num().get_si();
}

std::string Indexed(const std::string& prefix, int64_t i) {
  return prefix + std::to_string(i);
}

Network Finish(const NetworkBuilder& builder) {
  Network net = builder.Build();
  RequireValid(net);
  return net;
}

}  // namespace

Network GenFig1() {
  NetworkBuilder b;
  b.SetSource("s");
  b.AddNode("v");
  b.SetSink("t");
  b.AddArc("a1", "s", "v", 2);
  b.AddArc("a2", "s", "v", 2);
  b.AddArc("a3", "v", "t", 1);
  b.AddArc("a4", "v", "t", 1);
  b.AddArc("a5", "v", "t", 1);
  return Finish(b);
}

Network GenFan(int gamma) {
  if (gamma < 1) ThrowInvalid("fan requires gamma >= 1");
  NetworkBuilder b;
  b.SetSource("s");
  for (int i = 1; i <= gamma + 1; ++i) b.AddNode(Indexed("v", i));
  b.SetSink("t");
  for (int i = 1; i <= gamma + 1; ++i) {
    b.AddArc(Indexed("a", i), "s", Indexed("v", i), 1);
    b.AddArc(Indexed("b", i), Indexed("v", i), "t", 1);
  }
  return Finish(b);
}

Network GenBottleneck(int gamma, int beta) {
  if (gamma < 1 || beta < 1) ThrowInvalid("bottleneck requires gamma >= 1 and beta >= 1");
  const int64_t eta = static_cast<int64_t>(beta) * (static_cast<int64_t>(gamma) * gamma + gamma);
  if (eta > 100000) ThrowInvalid("bottleneck eta " + std::to_string(eta) + " is too large");
  NetworkBuilder b;
  b.SetSource("s");
  b.AddNode("v");
  b.SetSink("t");
  for (int i = 1; i <= gamma + 1; ++i) b.AddArc(Indexed("a", i), "s", "v", eta);
  for (int64_t i = 1; i <= eta; ++i) b.AddArc(Indexed("b", i), "v", "t", 1);
  return Finish(b);
}

PorStaticInstance GenPorStatic(int gamma, const Rational& alpha) {
  if (gamma < 2) ThrowInvalid("por-static requires gamma >= 2");
  const Rational upper = Rational(2 * gamma, gamma + 1);
  if (alpha < 1 || alpha >= upper) {
    ThrowInvalid("por-static requires 1 <= alpha < " + ToString(upper) + ", got " +
                 ToString(alpha));
  }
  PorStaticInstance out;
  out.eta = (gamma * (alpha - 2) + alpha) / ((gamma - 1) * (alpha - 2));
  const Rational thin = 1 - out.eta;
  const Rational wide = gamma - (gamma - 1) * out.eta;
  if (thin <= 0 || wide <= 0) {
    ThrowInvalid("por-static with alpha " + ToString(alpha) +
                 " yields a nonpositive capacity (eta = " + ToString(out.eta) + ")");
  }
  out.scale = Rational(DenominatorLcmOf({thin, wide}));
  auto build = [&](const Rational& factor) {
    NetworkBuilder b;
    b.SetSource("s");
    b.AddNode("v1");
    b.AddNode("v2");
    b.SetSink("t");
    for (int i = 1; i < gamma; ++i) {
      b.AddArc(Indexed("a'", i), "s", "v1", thin * factor);
      b.AddArc(Indexed("a''", i), "v1", "v2", thin * factor);
      b.AddArc(Indexed("a'''", i), "v2", "t", thin * factor);
    }
    b.AddArc(Indexed("a'", gamma), "s", "v1", factor);
    b.AddArc(Indexed("a'''", gamma), "v2", "t", factor);
    b.AddArc("a1", "s", "v2", wide * factor);
    b.AddArc("a2", "v1", "t", wide * factor);
    return Finish(b);
  };
  out.rational = build(1);
  out.scaled = build(out.scale);
  return out;
}

PorDynamicInstance GenPorDynamic(int gamma, const Rational& alpha) {
  if (gamma < 1) ThrowInvalid("por-dynamic requires gamma >= 1");
  if (alpha < 1 || alpha >= gamma + 1) {
    ThrowInvalid("por-dynamic requires 1 <= alpha < " + std::to_string(gamma + 1) +
                 ", got " + ToString(alpha));
  }
  PorDynamicInstance out;
  out.eta = ((gamma + 1) - alpha) / (gamma * alpha * (gamma + 1));
  const Rational share(1, gamma + 1);
  const Rational slow = share - out.eta;
  struct Spec {
    std::string id, tail, head;
    Rational tau, delay;
  };
  std::vector<Spec> specs;
  auto v = [](int i) { return Indexed("v", i); };
  auto w = [](int i) { return Indexed("w", i); };
  specs.push_back({"a*1", "s", v(1), 0, 0});
  for (int i = 1; i <= gamma; ++i) {
    specs.push_back({"a" + std::to_string(i) + "^1", v(i), w(i), slow, 0});
    specs.push_back({"a" + std::to_string(i) + "^2", v(i), w(i), 0, share});
    specs.push_back({Indexed("a*", i + 1), w(i), i == gamma ? "t" : v(i + 1), 0, 0});
  }
  std::vector<Rational> times;
  for (const Spec& s : specs) {
    out.travel_time.push_back(s.tau);
    out.delay.push_back(s.delay);
    times.push_back(s.tau);
    times.push_back(s.delay);
  }
  out.scale = Rational(DenominatorLcmOf(times));
  NetworkBuilder b;
  b.SetSource("s");
  for (int i = 1; i <= gamma; ++i) {
    b.AddNode(v(i));
    b.AddNode(w(i));
  }
  b.SetSink("t");
  for (const Spec& s : specs) {
    b.AddArc(s.id, s.tail, s.head, 1, ToInt64(s.tau * out.scale),
             ToInt64(s.delay * out.scale));
  }
  out.scaled.network = Finish(b);
  out.scaled.horizon = ToInt64(out.scale);
  out.scaled.gamma = gamma;
  return out;
}

DynamicInstance GenPartition(const std::vector<int64_t>& values, int extra_gamma) {
  if (values.empty()) ThrowInvalid("partition requires at least one value");
  if (extra_gamma < 1) ThrowInvalid("partition gamma must be at least 1");
  int64_t sum = 0, bmax = 0;
  for (int64_t x : values) {
    if (x < 1) ThrowInvalid("partition values must be positive");
    sum += x;
    bmax = std::max(bmax, x);
  }
  if (sum % 2 != 0) ThrowInvalid("partition values must have an even sum");
  const int64_t n = static_cast<int64_t>(values.size());
  const int64_t half = sum / 2;
  const int64_t horizon = (2 * n * bmax + 1) * half + 1;
  NetworkBuilder b;
  auto node = [n](int64_t i) {
    return i == 1 ? std::string("s") : i == n + 1 ? std::string("t") : Indexed("v", i);
  };
  b.SetSource("s");
  for (int64_t i = 2; i <= n; ++i) b.AddNode(node(i));
  b.SetSink("t");
  for (int64_t i = 1; i <= n; ++i) {
    const int64_t fast = n * bmax * values[i - 1];
    b.AddArc(Indexed("a*", i), node(i), node(i + 1), 1, fast, horizon);
    b.AddArc(Indexed("a'", i), node(i), node(i + 1), 1, fast + values[i - 1], horizon);
  }
  for (int j = 1; j < extra_gamma; ++j) b.AddArc(Indexed("e", j), "s", "t", 2, 0, horizon);
  DynamicInstance out;
  out.network = Finish(b);
  out.horizon = horizon;
  out.gamma = extra_gamma;
  return out;
}

DynamicInstance GenTiExample() {
  NetworkBuilder b;
  b.SetSource("s");
  b.AddNode("v");
  b.SetSink("t");
  b.AddArc("a1", "s", "v", 1, 0, 0);
  b.AddArc("a2", "v", "t", 1, 0, 2);
  b.AddArc("a3", "v", "t", 1, 1, 0);
  b.AddArc("a4", "s", "t", 1, 1, 1);
  DynamicInstance out;
  out.network = Finish(b);
  out.horizon = 2;
  out.gamma = 1;
  return out;
}

Network SplitCapacities(const Network& network) {
  RequireValid(network);
  const Rational umax = network.MaxCapacity();
  NetworkBuilder b;
  for (const std::string& name : network.nodes()) b.AddNode(name);
  b.SetSource(network.node_name(network.source()));
  b.SetSink(network.node_name(network.sink()));
  for (const Arc& arc : network.arcs()) {
    if (!IsIntegral(arc.capacity)) {
      ThrowInvalid("split_capacities requires integral capacities; arc " + arc.id +
                   " has " + ToString(arc.capacity));
    }
    const std::string mid = "v_" + arc.id;
    b.AddArc(arc.id + "'", network.node_name(arc.tail), mid, umax);
    const int64_t copies = ToInt64(arc.capacity);
    for (int64_t k = 1; k <= copies; ++k) {
      b.AddArc(arc.id + "#" + std::to_string(k), mid, network.node_name(arc.head), 1);
    }
  }
  return Finish(b);
}

namespace {

// Uniform integer in [lo, hi] by rejection sampling over raw 64-bit draws.
// std::uniform_int_distribution is implementation-defined, so it would make
// seeded instances differ between standard libraries.
int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + static_cast<int64_t>(rng());
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % range;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<int64_t>(draw % range);
}

}  // namespace

DynamicInstance GenRandom(const RandomParams& p) {
  if (p.nodes < 2) ThrowInvalid("random instances need at least 2 nodes");
  const int inner = p.nodes - 2;
  const int backbone = inner == 0 ? 1 : 2 * inner;
  if (p.arcs < backbone) {
    ThrowInvalid("random instances with " + std::to_string(p.nodes) + " nodes need at least " +
                 std::to_string(backbone) + " arcs");
  }
  if (p.max_capacity < 1) ThrowInvalid("max_capacity must be at least 1");
  if (p.gamma < 0) ThrowInvalid("gamma must be nonnegative");
  const bool dynamic = p.kind == RandomKind::kDynamic;
  if (dynamic && (p.max_travel_time < 0 || p.max_delay < 0 || p.horizon < 1)) {
    ThrowInvalid("dynamic random instances need nonnegative times and horizon >= 1");
  }
  std::mt19937_64 rng(p.seed);
  const int n = p.nodes;
  auto name = [n](int i) {
    return i == 0 ? std::string("s") : i == n - 1 ? std::string("t") : Indexed("v", i);
  };
  NetworkBuilder b;
  for (int i = 0; i < n; ++i) b.AddNode(name(i));
  b.SetSource("s");
  b.SetSink("t");
  int count = 0;
  auto add = [&](int tail, int head) {
    ++count;
    const Rational cap = UniformInt(rng, 1, p.max_capacity);
    int64_t tau = 0, delay = 0;
    if (dynamic) {
      tau = UniformInt(rng, 0, p.max_travel_time);
      delay = UniformInt(rng, 0, p.max_delay);
    }
    b.AddArc(Indexed("a", count), name(tail), name(head), cap, tau, delay);
  };
  if (inner == 0) add(0, 1);
  for (int i = 1; i <= inner; ++i) {
    add(static_cast<int>(UniformInt(rng, 0, i - 1)), i);
    add(i, static_cast<int>(UniformInt(rng, i + 1, n - 1)));
  }
  const bool acyclic = p.kind != RandomKind::kGeneral;
  while (count < p.arcs) {
    int tail, head;
    if (acyclic) {
      tail = static_cast<int>(UniformInt(rng, 0, n - 2));
      head = static_cast<int>(UniformInt(rng, tail + 1, n - 1));
    } else {
      tail = static_cast<int>(UniformInt(rng, 0, n - 2));
      head = static_cast<int>(UniformInt(rng, 1, n - 1));
      if (tail == head) continue;
    }
    add(tail, head);
  }
  DynamicInstance out;
  out.network = Finish(b);
  out.horizon = dynamic ? p.horizon : 1;
  out.gamma = p.gamma;
  return out;
}

bool BruteForcePartition(const std::vector<int64_t>& b) {
  if (b.size() > 25) ThrowInvalid("brute_force_partition supports at most 25 values");
  int64_t sum = 0;
  for (int64_t x : b) sum += x;
  if (sum % 2 != 0) return false;
  const uint64_t subsets = uint64_t{1} << b.size();
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    int64_t part = 0;
    for (size_t i = 0; i < b.size(); ++i) {
      if (mask >> i & 1) part += b[i];
    }
    if (2 * part == sum) return true;
  }
  return false;
}

namespace {

const Json& Param(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key)) {
    ThrowInvalid(std::string("missing generator parameter '") + key + "'");
  }
  return params.at(key);
}

int64_t IntParam(const Json& params, const char* key) {
  const Json& v = Param(params, key);
  if (!v.is_number_integer()) ThrowInvalid(std::string("parameter '") + key + "' must be an integer");
  return v.get<int64_t>();
}

int64_t IntParam(const Json& params, const char* key, int64_t fallback) {
  return params.is_object() && params.contains(key) ? IntParam(params, key) : fallback;
}

int SmallInt(int64_t v, const char* key) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    ThrowInvalid(std::string("parameter '") + key + "' is out of range");
  }
  return static_cast<int>(v);
}

RandomKind ParseRandomKind(const std::string& s) {
  if (s == "dag") return RandomKind::kDag;
  if (s == "general") return RandomKind::kGeneral;
  if (s == "dynamic") return RandomKind::kDynamic;
  ThrowInvalid("unknown random kind '" + s + "' (expected dag, general or dynamic)");
}

}  // namespace

InstanceFile GenerateFamily(const std::string& family, const Json& params) {
  InstanceFile out;
  Json provenance;
  provenance["family"] = family;
  provenance["params"] = params.is_null() ? Json::object() : params;
  if (family == "fig1") {
    out.network = GenFig1();
  } else if (family == "fan") {
    const int gamma = SmallInt(IntParam(params, "gamma"), "gamma");
    out.network = GenFan(gamma);
    out.gamma = gamma;
  } else if (family == "bottleneck") {
    const int gamma = SmallInt(IntParam(params, "gamma"), "gamma");
    out.network = GenBottleneck(gamma, SmallInt(IntParam(params, "beta"), "beta"));
    out.gamma = gamma;
    provenance["eta"] = RationalToJson(out.network.arc(0).capacity);
  } else if (family == "por-static" || family == "por-static-scaled") {
    const int gamma = SmallInt(IntParam(params, "gamma"), "gamma");
    PorStaticInstance por = GenPorStatic(gamma, RationalFromJson(Param(params, "alpha")));
    const bool scaled = family == "por-static-scaled";
    out.network = scaled ? por.scaled : por.rational;
    out.gamma = gamma;
    provenance["eta"] = RationalToJson(por.eta);
    provenance["scale"] = RationalToJson(scaled ? por.scale : Rational(1));
  } else if (family == "por-dynamic") {
    const int gamma = SmallInt(IntParam(params, "gamma"), "gamma");
    PorDynamicInstance por = GenPorDynamic(gamma, RationalFromJson(Param(params, "alpha")));
    out.network = por.scaled.network;
    out.horizon = por.scaled.horizon;
    out.gamma = gamma;
    provenance["eta"] = RationalToJson(por.eta);
    provenance["scale"] = RationalToJson(por.scale);
    Json times = Json::array();
    for (size_t a = 0; a < por.travel_time.size(); ++a) {
      times.push_back({{"id", out.network.arc(static_cast<int>(a)).id},
                       {"travel_time", RationalToJson(por.travel_time[a])},
                       {"delay", RationalToJson(por.delay[a])}});
    }
    provenance["unscaled_times"] = std::move(times);
    provenance["unscaled_horizon"] = 1;
  } else if (family == "partition") {
    const Json& b = Param(params, "b");
    if (!b.is_array()) ThrowInvalid("parameter 'b' must be an array of integers");
    std::vector<int64_t> values;
    for (const Json& x : b) {
      if (!x.is_number_integer()) ThrowInvalid("parameter 'b' must be an array of integers");
      values.push_back(x.get<int64_t>());
    }
    DynamicInstance inst =
        GenPartition(values, SmallInt(IntParam(params, "gamma", 1), "gamma"));
    out.network = inst.network;
    out.horizon = inst.horizon;
    out.gamma = inst.gamma;
    provenance["partition_yes"] = BruteForcePartition(values);
  } else if (family == "ti-example") {
    DynamicInstance inst = GenTiExample();
    out.network = inst.network;
    out.horizon = inst.horizon;
    out.gamma = inst.gamma;
  } else if (family == "random") {
    RandomParams p;
    if (params.is_object() && params.contains("kind")) {
      const Json& kind = params.at("kind");
      if (!kind.is_string()) ThrowInvalid("parameter 'kind' must be a string");
      p.kind = ParseRandomKind(kind.get<std::string>());
    }
    p.nodes = SmallInt(IntParam(params, "nodes", p.nodes), "nodes");
    p.arcs = SmallInt(IntParam(params, "arcs", p.arcs), "arcs");
    p.max_capacity = IntParam(params, "max_capacity", p.max_capacity);
    p.max_travel_time = IntParam(params, "max_travel_time", p.max_travel_time);
    p.max_delay = IntParam(params, "max_delay", p.max_delay);
    p.horizon = IntParam(params, "horizon", p.horizon);
    p.gamma = SmallInt(IntParam(params, "gamma", p.gamma), "gamma");
    p.seed = static_cast<uint64_t>(IntParam(params, "seed", 0));
    DynamicInstance inst = GenRandom(p);
    out.network = inst.network;
    if (p.kind == RandomKind::kDynamic) out.horizon = inst.horizon;
    out.gamma = inst.gamma;
  } else if (family == "split") {
    const Json& inner = Param(params, "of");
    if (!inner.is_object() || !inner.contains("family") || !inner.at("family").is_string()) {
      ThrowInvalid("parameter 'of' must be an object with a 'family' string");
    }
    InstanceFile base = GenerateFamily(inner.at("family").get<std::string>(),
                                       inner.contains("params") ? inner.at("params") : Json());
    out.network = SplitCapacities(base.network);
    out.gamma = base.gamma;
  } else {
    ThrowInvalid("unknown family '" + family +
                 "' (expected fig1, fan, bottleneck, por-static, por-static-scaled, "
                 "por-dynamic, partition, ti-example, random or split)");
  }
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace robustflow
