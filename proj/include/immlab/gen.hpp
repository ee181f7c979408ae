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

#ifndef IMMLAB_GEN_HPP
#define IMMLAB_GEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "immlab/construct.hpp"
#include "immlab/graph.hpp"
#include "immlab/inflation.hpp"
#include "immlab/pattern.hpp"

namespace immlab {

/// Complement of a random triangle-free graph: pairs are visited in shuffled
/// order and each is inserted into the complement with probability 1/2 unless
/// it would close a triangle there.
Graph random_alpha2(int n, std::uint64_t seed);

/// Random h-free graph with independence number at most 2.
///
/// Start state: up to max_tries (capped at 32 unless h is K4) rejection
/// samples over random_alpha2; the first h-free one is a candidate, as are a
/// random inflation of C5 (if h-free) and K_n (never for K4, which uses the
/// complement of the Wagner graph as its fallback on n <= 8). One candidate
/// is picked uniformly, then a toggle chain runs for 4 * n(n-1)/2 steps: each
/// toggles a uniformly chosen pair and undoes the toggle if it creates an
/// independent triple or an induced h through that pair. K4-free graphs with
/// alpha <= 2 have at most 8 vertices, so K4 with larger n exhausts max_tries.
Graph random_hfree_alpha2(PatternKind h, int n, std::uint64_t seed, int max_tries = 1000);

enum class InflationKind { kPath, kCycle };

struct GeneratedInflation {
  InflationSpec spec;
  Inflation inflation;
};

/// Bag sizes uniform in [1, max_bag]. For paths (k even) the last bag is then
/// redrawn in [1, min(f_k, even-position sizes)] and the first in [1, min of
/// all others], so the first bag is a global minimum and the last bag is a
/// minimum over even positions.
GeneratedInflation random_inflation(InflationKind kind, int k, int max_bag, std::uint64_t seed);

/// Instance with a planted induced H (C4, C5 or P4) on which the extension
/// lemmas apply: every H-edge dominates G - H and alpha <= 2. The part the
/// lemma recurses on (G - H, or G - {a1..a4} for C5) is kept owh-free so the
/// recursion can produce a sub-certificate. Vertex ids are shuffled at the end.
struct DominatingInstance {
  Graph graph;
  ExtensionShape shape;
  std::vector<Vertex> h;  // a1, a2, ... in cyclic / path order
};
DominatingInstance dominating_family(ExtensionShape shape, int n, std::uint64_t seed);

/// Inflation of C_{2 alpha + 1} joined to a clique B, vertex ids shuffled.
struct ForbholesOptions {
  int max_bag = 3;
  std::vector<int> bags;            // explicit sizes, overrides max_bag
  std::optional<int> universal;     // |B|; uniform in [0, 2] when unset
};
struct ForbholesInstance {
  Graph graph;
  BagMap bags;
  VertexSet universal;
};
ForbholesInstance forbholes_family(int alpha, std::uint64_t seed,
                                   const ForbholesOptions& options = {});

/// Family name plus parameters. JSON keys match the field names.
struct GenSpec {
  std::string family;  // alpha2 hfree inflation dominating_c4 dominating_c5 dominating_p4 forbholes
  int n = 0;
  std::uint64_t seed = 0;
  int max_tries = 1000;
  std::string pattern;      // hfree
  std::string kind;         // inflation: path | cycle
  int k = 0;                // inflation
  int max_bag = 3;          // inflation, forbholes
  int alpha = 2;            // forbholes
  std::optional<int> universal;
  std::vector<int> bags;
};

nlohmann::json gen_spec_to_json(const GenSpec& s);
GenSpec gen_spec_from_json(const nlohmann::json& j);

struct GenResult {
  Graph graph;
  nlohmann::json truth;  // family-specific ground truth, written as a sidecar
};

/// Dispatches on the family name. Throws PreconditionError for unknown
/// families or bad parameters.
GenResult generate(const GenSpec& spec);

}  // namespace immlab

#endif  // IMMLAB_GEN_HPP
