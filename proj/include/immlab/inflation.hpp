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

#ifndef IMMLAB_INFLATION_HPP
#define IMMLAB_INFLATION_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "immlab/analysis.hpp"
#include "immlab/errors.hpp"
#include "immlab/graph.hpp"

namespace immlab {

inline constexpr std::string_view kInflationFormat = "immlab-inflation-v1";

/// Base graph plus a positive bag size for every base vertex.
struct InflationSpec {
  Graph base;
  std::vector<int> bag_sizes;
};

/// bags[i] is the clique that replaced base vertex i.
struct BagMap {
  std::vector<VertexSet> bags;

  int size() const { return static_cast<int>(bags.size()); }
  std::vector<int> sizes() const;
};

struct Inflation {
  Graph graph;
  BagMap bags;
};

/// Bag i receives the next bag_sizes[i] ids, so x_{i,r} is the r-th id of B_i.
/// Throws PreconditionError on a size mismatch or a bag size below 1.
Inflation build_inflation(const InflationSpec& spec);

/// Bags disjoint, each a clique, cross-bag adjacency exactly as in `base`.
/// With require_cover the bags must also cover every vertex of g.
Verdict bag_invariant_check(const Graph& g, const Graph& base, const BagMap& m,
                            bool require_cover = true);

/// Exact chromatic number of the inflation, solved on the base graph as a
/// covering problem: find the fewest independent sets of the base (repeats
/// allowed) that cover vertex i at least bag_sizes[i] times. The returned
/// colouring is indexed by the inflated graph's ids as laid out by
/// build_inflation. Base graphs are limited to 24 vertices.
Coloring inflation_chromatic_number(const InflationSpec& spec);

nlohmann::json inflation_spec_to_json(const InflationSpec& spec);
InflationSpec inflation_spec_from_json(const nlohmann::json& j);

}  // namespace immlab

#endif  // IMMLAB_INFLATION_HPP
