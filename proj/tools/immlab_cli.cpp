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

// immlab command line: analyze, solve, verify, gen, bench, oracle.
//
// Exit codes: 0 success, 1 certificate rejected, 2 bad input or violated
// precondition, 3 structural claim failed (instance written to
// <input>.violation.json), 4 search budget exceeded.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "immlab/analysis.hpp"
#include "immlab/bench.hpp"
#include "immlab/certificate.hpp"
#include "immlab/errors.hpp"
#include "immlab/gen.hpp"
#include "immlab/graph_io.hpp"
#include "immlab/oracle.hpp"
#include "immlab/pattern.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace immlab;

namespace {

enum Exit { kOk = 0, kRejected = 1, kBadInput = 2, kClaim = 3, kBudget = 4 };

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dot_export(const Graph& g, const ImmersionCertificate& c) {
  static const char* kPalette[] = {"red",    "blue",   "darkgreen", "orange", "purple",
                                   "brown",  "teal",   "magenta",   "gold",   "navy",
                                   "olive",  "maroon", "cyan",      "pink",   "gray"};
  constexpr std::size_t kColors = std::size(kPalette);
  std::vector<std::string> edge_color(static_cast<std::size_t>(g.order() * g.order()));
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const auto& w = c.paths[i].walk;
    for (std::size_t j = 1; j < w.size(); ++j) {
      const Vertex a = std::min(w[j - 1], w[j]);
      const Vertex b = std::max(w[j - 1], w[j]);
      edge_color[a * g.order() + b] = kPalette[i % kColors];
    }
  }
  std::string out = "graph immersion {\n  node [shape=circle];\n";
  for (Vertex v : c.branch) out += "  " + std::to_string(v) + " [shape=doublecircle];\n";
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    const std::string& col = edge_color[e.u * g.order() + e.v];
    out += col.empty() ? " [color=lightgray]" : " [color=" + col + ", penwidth=2]";
    out += ";\n";
  }
  return out + "}\n";
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw PreconditionError("cannot write " + p.string());
  f << text;
}

int cmd_analyze(const std::string& file) {
  const Graph g = read_graph_file(file);
  const int n = g.order();
  json r{{"n", n}, {"m", g.size()}, {"sha256", graph_sha256(g)}};
  const int alpha = independence_number(g);
  r["alpha"] = alpha;
  r["omega"] = clique_number(g);
  if (n <= kExactColoringLimit) r["chi"] = chromatic_number(g).colors;
  r["alpha_at_most_2"] = alpha <= 2;
  if (const auto hole = find_hole_in_range(g, 4, n)) {
    r["hole"] = hole->cycle;
  } else {
    r["hole"] = nullptr;
  }
  json flags;
  for (PatternKind p : all_patterns()) flags[std::string(pattern_name(p)) + "_free"] = is_free_of(g, p);
  r["free"] = flags;
  print(r);
  return kOk;
}

int cmd_solve(const std::string& file, const std::string& method, const std::string& out,
              const std::string& dot, bool stats) {
  const Graph g = read_graph_file(file);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult r = solve_with_method(g, method);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const SolveReport rep = make_report(g, r, ms, stats);
  if (!out.empty()) write_json_file(out, certificate_to_json(r.certificate));
  if (!dot.empty()) write_text(dot, dot_export(g, r.certificate));
  print(rep.to_json());
  return rep.verified ? kOk : kRejected;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
  const Graph g = read_graph_file(graph_file);
  const ImmersionCertificate c = certificate_from_json(read_json_file(cert_file));
  const CertificateVerdict v = verify_certificate(g, c);
  json r{{"accepted", v.accepted()}, {"order", c.order()}};
  if (!v.accepted()) {
    r["condition"] = condition_name(v.violated);
    r["detail"] = v.detail;
  }
  print(r);
  if (v.violated == Condition::kHostMismatch) return kBadInput;
  return v.accepted() ? kOk : kRejected;
}

int cmd_gen(GenSpec spec, const std::string& spec_file, const std::string& out) {
  if (!spec_file.empty()) spec = gen_spec_from_json(read_json_file(spec_file));
  const GenResult res = generate(spec);
  if (out.empty()) {
    print({{"graph", graph_to_json(res.graph)}, {"truth", res.truth}});
    return kOk;
  }
  write_json_file(out, graph_to_json(res.graph));
  write_json_file(out + ".truth.json", res.truth);
  return kOk;
}

int cmd_bench(const BenchOptions& opt, const std::string& json_out) {
  const json summary = run_bench(opt);
  std::printf("%-6s %-10s %-24s %5s %5s %10s  %s\n", "index", "status", "method", "n", "order",
              "ms", "id");
  int i = 0;
  for (const json& r : summary["reports"]) {
    std::printf("%-6d %-10s %-24s %5d %5d %10.2f  %.12s\n", i++,
                r["status"].get<std::string>().c_str(), r["method"].get<std::string>().c_str(),
                r["n"].get<int>(), r["order"].get<int>(), r["wall_ms"].get<double>(),
                r["id"].get<std::string>().c_str());
  }
  std::printf("suite %s: %d passed, %d failed, %zu claim violations\n", opt.suite.c_str(),
              summary["passed"].get<int>(), summary["failed"].get<int>(),
              summary["violations"].size());
  if (!json_out.empty()) write_json_file(json_out, summary);
  if (!summary["violations"].empty()) return kClaim;
  return summary["failed"].get<int>() == 0 ? kOk : kRejected;
}

int cmd_oracle(const std::string& file, int t, int max_n, const std::string& out) {
  const Graph g = read_graph_file(file);
  OracleBudget budget;
  budget.max_n = max_n;
  budget.max_t = std::max(1, g.order());
  json r{{"n", g.order()}};
  std::optional<ImmersionCertificate> cert;
  if (t > 0) {
    cert = brute_force_immersion(g, t, budget);
    r["t"] = t;
    r["found"] = cert.has_value();
  } else {
    int best = 0;
    for (int s = 1; s <= g.order(); ++s) {
      auto c = brute_force_immersion(g, s, budget);
      if (!c) break;
      cert = std::move(c);
      best = s;
    }
    r["max_order"] = best;
  }
  if (cert) {
    r["verified"] = verify_certificate(g, *cert).accepted();
    if (!out.empty()) write_json_file(out, certificate_to_json(*cert));
  }
  print(r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"immlab: clique immersion certificates"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string cert_file;
  std::string out;
  std::string dot;
  std::string method = "auto";
  bool stats = false;

  auto* analyze = app.add_subcommand("analyze", "Structural report for a graph");
  analyze->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();

  auto* solve = app.add_subcommand("solve", "Build and verify a clique immersion certificate");
  solve->add_option("graph", graph_file, "Graph file")->required();
  solve->add_option("--method", method,
                    "auto|forbholes|house|owh|k4|k4minus|vergara:<pattern>|oracle");
  solve->add_option("--out", out, "Write the certificate here");
  solve->add_option("--dot", dot, "Write a DOT rendering here");
  solve->add_flag("--stats", stats, "Include alpha, omega and chi in the report");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", graph_file, "Graph file")->required();
  verify->add_option("cert", cert_file, "Certificate JSON")->required();

  GenSpec spec;
  std::string spec_file;
  int universal = -1;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--spec", spec_file, "GenSpec JSON file (overrides flags)");
  gen->add_option("--family", spec.family,
                  "alpha2|hfree|inflation|dominating_c4|dominating_c5|dominating_p4|forbholes");
  gen->add_option("--n", spec.n, "Number of vertices");
  gen->add_option("--seed", spec.seed, "64-bit seed");
  gen->add_option("--max-tries", spec.max_tries, "Rejection sampling attempts");
  gen->add_option("--pattern", spec.pattern, "Forbidden pattern (hfree)");
  gen->add_option("--kind", spec.kind, "path|cycle (inflation)");
  gen->add_option("--k", spec.k, "Base length (inflation)");
  gen->add_option("--max-bag", spec.max_bag, "Largest bag size");
  gen->add_option("--alpha", spec.alpha, "Independence number (forbholes)");
  gen->add_option("--universal", universal, "Universal clique size (forbholes)");
  gen->add_option("--bags", spec.bags, "Explicit bag sizes (forbholes)");
  gen->add_option("--out", out, "Graph file; ground truth goes to <out>.truth.json");

  BenchOptions bench_opt;
  std::string bench_json;
  auto* bench = app.add_subcommand("bench", "Run a seeded suite");
  bench->add_option("suite", bench_opt.suite, "Suite name")->required();
  bench->add_option("--count", bench_opt.count, "Instances");
  bench->add_option("--seed", bench_opt.seed, "Base seed");
  bench->add_option("--jobs", bench_opt.jobs, "Worker threads");
  bench->add_option("--json", bench_json, "Write the summary JSON here");

  int oracle_t = 0;
  int oracle_max_n = 10;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive clique immersion search");
  oracle->add_option("graph", graph_file, "Graph file")->required();
  oracle->add_option("--t", oracle_t, "Test this order only (default: find the maximum)");
  oracle->add_option("--max-n", oracle_max_n, "Refuse larger graphs");
  oracle->add_option("--out", out, "Write the best certificate here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*analyze) return cmd_analyze(graph_file);
    if (*solve) return cmd_solve(graph_file, method, out, dot, stats);
    if (*verify) return cmd_verify(graph_file, cert_file);
    if (*gen) {
      if (universal >= 0) spec.universal = universal;
      return cmd_gen(spec, spec_file, out);
    }
    if (*bench) return cmd_bench(bench_opt, bench_json);
    if (*oracle) return cmd_oracle(graph_file, oracle_t, oracle_max_n, out);
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violation: " << e.what() << "\n";
    const fs::path sidecar = (graph_file.empty() ? std::string("instance") : graph_file) +
                             ".violation.json";
    try {
      write_text(sidecar, e.instance_json());
      std::cerr << "instance written to " << sidecar.string() << "\n";
    } catch (const std::exception&) {
    }
    return kClaim;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
