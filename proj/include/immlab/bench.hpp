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

#ifndef IMMLAB_BENCH_HPP
#define IMMLAB_BENCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "immlab/certificate.hpp"
#include "immlab/graph.hpp"

namespace immlab {

struct SolveReport {
  std::string id;  // sha256 of the canonical graph text
  int n = 0;
  std::string method;
  int order = 0;
  bool verified = false;
  std::string violated;  // condition name when not verified
  std::optional<int> alpha;
  std::optional<int> omega;
  std::optional<int> chi;
  double wall_ms = 0.0;
  std::string status = "ok";  // ok verify_failed check_failed precondition claim_violation budget
  std::string error;

  nlohmann::json to_json() const;
};

struct SolveResult {
  ImmersionCertificate certificate;
  std::string method;  // dispatch path actually taken
};

/// Methods: auto, forbholes, house, owh, k4, k4minus, vergara:<pattern>,
/// oracle. auto tries C4, P4, paw, twoK2, K3v, K4minus, K4 in that order and
/// takes the first pattern the graph is free of (C4 goes to the hole-free
/// constructor, which needs no bound on alpha); otherwise the oracle for
/// n <= 10. Errors propagate as PreconditionError, ClaimViolation or
/// BudgetExceeded.
SolveResult solve_with_method(const Graph& g, std::string_view method);

/// Recomputes the verdict with verify_certificate. With stats, fills alpha,
/// omega and (for n <= 24) chi.
SolveReport make_report(const Graph& g, const SolveResult& r, double wall_ms, bool stats);

std::span<const std::string_view> bench_suites();

struct BenchOptions {
  std::string suite;
  int count = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Runs `count` seeded instances of a suite and returns
/// {"suite", "passed", "failed", "violations": [...], "reports": [...]}.
/// Reports are ordered by instance index regardless of jobs.
nlohmann::json run_bench(const BenchOptions& options);

/// Seed of instance i in a run with the given base seed.
std::uint64_t instance_seed(std::uint64_t base, int index);

}  // namespace immlab

#endif  // IMMLAB_BENCH_HPP
