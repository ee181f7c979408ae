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

#ifndef IMMLAB_ORACLE_HPP
#define IMMLAB_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "immlab/certificate.hpp"
#include "immlab/graph.hpp"

namespace immlab {

struct OracleBudget {
  int max_n = 10;
  int max_t = 6;
  /// Search nodes (path placements tried) before BudgetExceeded is thrown.
  std::int64_t node_limit = 200'000'000;
};

/// Exhaustive search for a K_t immersion. Branch sets are tried in
/// lexicographic order; for each, the pair with the fewest remaining route
/// options is routed next. Throws PreconditionError when n or t exceed the
/// budget and BudgetExceeded when the node limit is hit.
std::optional<ImmersionCertificate> brute_force_immersion(const Graph& g, int t,
                                                          const OracleBudget& budget = {});

/// Largest t <= budget.max_t (and <= n) with a K_t immersion.
int max_immersion_order(const Graph& g, const OracleBudget& budget = {});

}  // namespace immlab

#endif  // IMMLAB_ORACLE_HPP
