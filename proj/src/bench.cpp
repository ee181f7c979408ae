// Copyright 2026 The immlab Authors
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

#include "immlab/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <thread>
#include <vector>

#include "immlab/analysis.hpp"
#include "immlab/construct.hpp"
#include "immlab/errors.hpp"
#include "immlab/gen.hpp"
#include "immlab/graph_io.hpp"
#include "immlab/oracle.hpp"
#include "immlab/random.hpp"

namespace immlab {

namespace {

constexpr int kOracleAutoLimit = 10;

ImmersionCertificate oracle_best(const Graph& g) {
  OracleBudget budget;
  budget.max_n = kOracleAutoLimit;
  budget.max_t = std::max(1, g.order());
  ImmersionCertificate best;
  for (int t = 1; t <= g.order(); ++t) {
    auto cert = brute_force_immersion(g, t, budget);
    if (!cert) break;
    best = std::move(*cert);
  }
  return best;
}

const char* routine_for(PatternKind p) {
  switch (p) {
    case PatternKind::C4:
      return "forbholes";
    case PatternKind::P4:
    case PatternKind::Paw:
      return "house";
    case PatternKind::K4minus:
      return "k4minus";
    case PatternKind::K4:
      return "k4";
    default:
      return "owh";
  }
}

constexpr std::array<PatternKind, 7> kAutoOrder = {
    PatternKind::C4,  PatternKind::P4,      PatternKind::Paw, PatternKind::TwoK2,
    PatternKind::K3v, PatternKind::K4minus, PatternKind::K4};

}  // namespace

nlohmann::json SolveReport::to_json() const {
  nlohmann::json j{{"id", id},         {"n", n},           {"method", method},
                   {"order", order},   {"verified", verified}, {"wall_ms", wall_ms},
                   {"status", status}};
  if (!violated.empty()) j["violated"] = violated;
  if (alpha) j["alpha"] = *alpha;
  if (omega) j["omega"] = *omega;
  if (chi) j["chi"] = *chi;
  if (!error.empty()) j["error"] = error;
  return j;
}

SolveResult solve_with_method(const Graph& g, std::string_view method) {
  if (method == "auto") {
    for (PatternKind p : kAutoOrder) {
      if (!is_free_of(g, p)) continue;
      const std::string path = std::string(pattern_name(p)) + "->" + routine_for(p);
      if (p == PatternKind::C4) return {hole_free_immersion(g), path};
      return {vergara_solve(g, p), path};
    }
    if (g.order() <= kOracleAutoLimit) return {oracle_best(g), "oracle"};
    throw PreconditionError("auto: graph contains all seven patterns and has more than " +
                            std::to_string(kOracleAutoLimit) + " vertices");
  }
  if (method == "forbholes") return {hole_free_immersion(g), "forbholes"};
  if (method == "house") return {house_free_immersion(g), "house"};
  if (method == "owh") return {owh_free_immersion(g), "owh"};
  if (method == "k4") return {k4_free_immersion(g), "k4"};
  if (method == "k4minus") return {k4minus_free_clique(g).certificate, "k4minus"};
  if (method == "oracle") return {oracle_best(g), "oracle"};
  if (method.starts_with("vergara:")) {
    const auto p = parse_pattern(method.substr(8));
    if (!p) throw PreconditionError("unknown pattern in method '" + std::string(method) + "'");
    return {vergara_solve(g, *p), std::string(method)};
  }
  throw PreconditionError("unknown method '" + std::string(method) + "'");
}

SolveReport make_report(const Graph& g, const SolveResult& r, double wall_ms, bool stats) {
  SolveReport rep;
  rep.id = graph_sha256(g);
  rep.n = g.order();
  rep.method = r.method;
  rep.order = r.certificate.order();
  const CertificateVerdict v = verify_certificate(g, r.certificate);
  rep.verified = v.accepted();
  if (!rep.verified) {
    rep.violated = std::string(condition_name(v.violated));
    rep.status = "verify_failed";
  }
  rep.wall_ms = wall_ms;
  if (stats) {
    rep.alpha = independence_number(g);
    rep.omega = clique_number(g);
    if (g.order() <= kExactColoringLimit) rep.chi = chromatic_number(g).colors;
  }
  return rep;
}

std::uint64_t instance_seed(std::uint64_t base, int index) {
  std::uint64_t x = base ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
  return splitmix64(x);
}

namespace {

struct Instance {
  Graph graph;
  std::function<SolveResult()> solve;
  // Extra suite-specific check on the result; returns an error or "".
  std::function<std::string(const SolveResult&)> check;
};

std::string need_half(const Graph& g, const SolveResult& r) {
  return r.certificate.order() >= half_up(g.order()) ? "" : "order below ceil(n/2)";
}

Instance suite_instance(std::string_view suite, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t gs = rng.next();
  Instance in;
  if (suite == "alpha2") {
    in.graph = random_alpha2(rng.between(1, 10), gs);
    in.solve = [g = in.graph] { return solve_with_method(g, "auto"); };
    in.check = [g = in.graph](const SolveResult& r) { return need_half(g, r); };
  } else if (suite == "lemma21") {
    const GeneratedInflation gi = random_inflation(InflationKind::kPath, 2 * rng.between(1, 5),
                                                   5, gs);
    in.graph = gi.inflation.graph;
    const BagMap m = gi.inflation.bags;
    in.solve = [g = in.graph, m] {
      return SolveResult{path_inflation_clique_immersion(g, m), "lemma21"};
    };
    in.check = [m](const SolveResult& r) -> std::string {
      VertexSet want = m.bags.front();
      want.insert(want.end(), m.bags.back().begin(), m.bags.back().end());
      std::sort(want.begin(), want.end());
      VertexSet got = r.certificate.branch;
      std::sort(got.begin(), got.end());
      return got == want ? "" : "branch set is not B_1 u B_last";
    };
  } else if (suite == "lemma22") {
    const GeneratedInflation gi = random_inflation(InflationKind::kCycle, rng.between(3, 9), 4, gs);
    in.graph = gi.inflation.graph;
    const BagMap m = gi.inflation.bags;
    const InflationSpec spec = gi.spec;
    auto colors = std::make_shared<int>(0);
    in.solve = [g = in.graph, m, colors] {
      CycleInflationResult res = cycle_inflation_clique_immersion(g, m);
      if (!is_proper_coloring(g, res.coloring.color)) *colors = -1;
      else *colors = res.coloring.colors;
      return SolveResult{std::move(res.certificate), "lemma22"};
    };
    in.check = [spec, colors](const SolveResult& r) -> std::string {
      if (*colors < 0) return "colouring is not proper";
      if (*colors != r.certificate.order()) return "order differs from colours used";
      if (r.certificate.order() < inflation_chromatic_number(spec).colors) return "order below chi";
      return "";
    };
  } else if (suite == "forbholes") {
    const int alpha = rng.between(2, 3);
    const ForbholesInstance fi = forbholes_family(alpha, gs);
    in.graph = fi.graph;
    InflationSpec spec{cycle_graph(2 * alpha + 1), fi.bags.sizes()};
    const int expect = inflation_chromatic_number(spec).colors + static_cast<int>(fi.universal.size());
    in.solve = [g = in.graph] { return SolveResult{hole_free_immersion(g), "forbholes"}; };
    in.check = [expect](const SolveResult& r) {
      return r.certificate.order() == expect ? "" : "order differs from chi(G[A]) + |B|";
    };
  } else if (suite == "dominating_c4" || suite == "dominating_c5" || suite == "dominating_p4") {
    const ExtensionShape shape = suite == "dominating_c4"   ? ExtensionShape::kC4
                                 : suite == "dominating_c5" ? ExtensionShape::kC5
                                                            : ExtensionShape::kP4;
    const int hs = shape == ExtensionShape::kC5 ? 5 : 4;
    const DominatingInstance d = dominating_family(shape, rng.between(hs, 20), gs);
    in.graph = d.graph;
    in.solve = [d] {
      const Subgraph rest = delete_vertices(d.graph, std::span<const Vertex>(d.h.data(), 4));
      const ImmersionCertificate sub =
          lift_certificate(owh_free_immersion(rest.graph), rest.to_parent, d.graph);
      const ExtensionContext ctx = make_extension_context(d.graph, d.shape, d.h, sub);
      ImmersionCertificate cert = d.shape == ExtensionShape::kC4   ? extend_over_dominating_c4(ctx, sub)
                                  : d.shape == ExtensionShape::kC5 ? extend_over_dominating_c5(ctx, sub)
                                                                   : extend_over_dominating_p4(ctx, sub);
      return SolveResult{std::move(cert), "extension"};
    };
    in.check = [g = in.graph](const SolveResult& r) {
      return r.certificate.order() == half_up(g.order()) ? "" : "order is not ceil(n/2)";
    };
  } else if (suite == "house" || suite == "owh") {
    const PatternKind p = suite == "house" ? PatternKind::House : PatternKind::Owh;
    in.graph = random_hfree_alpha2(p, rng.between(1, 24), gs);
    const bool house = suite == "house";
    in.solve = [g = in.graph, house] {
      return SolveResult{house ? house_free_immersion(g) : owh_free_immersion(g),
                         house ? "house" : "owh"};
    };
    in.check = [g = in.graph](const SolveResult& r) { return need_half(g, r); };
  } else if (suite.starts_with("hfree-")) {
    const auto p = parse_pattern(suite.substr(6));
    if (!p) throw PreconditionError("unknown pattern in suite '" + std::string(suite) + "'");
    const int top = *p == PatternKind::K4 ? 8 : 20;
    in.graph = random_hfree_alpha2(*p, rng.between(1, top), gs);
    in.solve = [g = in.graph, p] {
      return SolveResult{vergara_solve(g, *p), "vergara:" + std::string(pattern_name(*p))};
    };
    in.check = [g = in.graph](const SolveResult& r) {
      return r.certificate.order() == half_up(g.order()) ? "" : "order is not ceil(n/2)";
    };
  } else if (suite == "oracle-agree") {
    in.graph = random_alpha2(rng.between(1, 9), gs);
    in.solve = [g = in.graph] { return SolveResult{oracle_best(g), "oracle"}; };
    in.check = [g = in.graph](const SolveResult& r) -> std::string {
      if (r.certificate.order() < half_up(g.order())) return "oracle order below ceil(n/2)";
      try {
        if (solve_with_method(g, "auto").certificate.order() > r.certificate.order()) {
          return "constructor beats the oracle maximum";
        }
      } catch (const PreconditionError&) {
      }
      return "";
    };
  } else {
    throw PreconditionError("unknown bench suite '" + std::string(suite) + "'");
  }
  return in;
}

}  // namespace

std::span<const std::string_view> bench_suites() {
  static constexpr std::array<std::string_view, 17> kSuites = {
      "alpha2",        "lemma21",       "lemma22",       "forbholes",     "dominating_c4",
      "dominating_c5", "dominating_p4", "house",         "owh",           "hfree-C4",
      "hfree-P4",      "hfree-paw",     "hfree-twoK2",   "hfree-K3v",     "hfree-K4minus",
      "hfree-K4",      "oracle-agree"};
  return kSuites;
}

nlohmann::json run_bench(const BenchOptions& options) {
  if (options.count < 0) throw PreconditionError("bench: count must be non-negative");
  // Reject unknown suites up front, even when count is 0.
  if (std::find(bench_suites().begin(), bench_suites().end(), options.suite) ==
      bench_suites().end()) {
    throw PreconditionError("unknown bench suite '" + options.suite + "'");
  }
  const int count = options.count;
  std::vector<SolveReport> reports(static_cast<std::size_t>(count));
  std::vector<nlohmann::json> violations(static_cast<std::size_t>(count));

  auto run_one = [&](int i) {
    SolveReport& rep = reports[i];
    Graph g;
    try {
      Instance in = suite_instance(options.suite, instance_seed(options.seed, i));
      g = in.graph;
      const auto t0 = std::chrono::steady_clock::now();
      const SolveResult r = in.solve();
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rep = make_report(g, r, ms, false);
      if (rep.verified) {
        const std::string why = in.check(r);
        if (!why.empty()) {
          rep.status = "check_failed";
          rep.error = why;
        }
      }
    } catch (const ClaimViolation& e) {
      rep.status = "claim_violation";
      rep.error = e.what();
      violations[i] = nlohmann::json::parse(e.instance_json(), nullptr, false);
    } catch (const PreconditionError& e) {
      rep.status = "precondition";
      rep.error = e.what();
    } catch (const BudgetExceeded& e) {
      rep.status = "budget";
      rep.error = e.what();
    }
    if (rep.id.empty()) {
      rep.id = graph_sha256(g);
      rep.n = g.order();
    }
  };

  const int jobs = std::max(1, std::min(options.jobs, std::max(1, count)));
  std::atomic<int> next{0};
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < count; i = next++) run_one(i);
      });
    }
  }

  nlohmann::json out{{"suite", options.suite}, {"seed", options.seed}, {"count", count}};
  int passed = 0;
  out["violations"] = nlohmann::json::array();
  out["reports"] = nlohmann::json::array();
  for (int i = 0; i < count; ++i) {
    if (reports[i].status == "ok") ++passed;
    if (!violations[i].is_null()) out["violations"].push_back(violations[i]);
    out["reports"].push_back(reports[i].to_json());
  }
  out["passed"] = passed;
  out["failed"] = count - passed;
  return out;
}

}  // namespace immlab
