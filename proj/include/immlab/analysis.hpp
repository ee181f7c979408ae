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

#ifndef IMMLAB_ANALYSIS_HPP
#define IMMLAB_ANALYSIS_HPP

#include <optional>
#include <span>
#include <vector>

#include "immlab/graph.hpp"
#include "immlab/pattern.hpp"

namespace immlab {

/// Exact clique / independence searches accept up to this many vertices.
inline constexpr int kExactCliqueLimit = 128;
/// Default vertex limit of the exact colouring search.
inline constexpr int kExactColoringLimit = 24;
/// Hard ceiling for the colouring search (colour sets are 64-bit masks).
inline constexpr int kColoringHardLimit = 64;

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

/// Colour classes are 0..colors-1; color[v] is the class of v.
struct Coloring {
  int colors = 0;
  std::vector<int> color;
};

/// Exact; n <= kExactCliqueLimit.
CliqueResult max_clique(const Graph& g);
int clique_number(const Graph& g);
/// Exact; n <= kExactCliqueLimit.
int independence_number(const Graph& g);
CliqueResult max_independent_set(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound, seeded with the lower
/// bound max(omega, ceil(n/alpha)) and a greedy upper bound. Throws
/// PreconditionError when n > max_n.
Coloring chromatic_number(const Graph& g, int max_n = kExactColoringLimit);

bool is_proper_coloring(const Graph& g, std::span<const int> color);
int colors_used(std::span<const int> color);

/// Finds an induced copy of `pattern` (at most 8 vertices). The returned
/// vector maps pattern vertex i to host vertex result[i], so edges of the
/// pattern map to edges of the host and non-edges to non-edges. Embeddings
/// are explored in lexicographic order of the image sequence; the first one
/// is returned.
std::optional<std::vector<Vertex>> find_induced(const Graph& g,
                                                const Graph& pattern);
std::optional<std::vector<Vertex>> find_induced(const Graph& g, PatternKind p);
bool is_free_of(const Graph& g, PatternKind p);

/// Induced cycle of length >= 4 in cyclic order, starting from its smallest
/// vertex and oriented so that the second entry is smaller than the last.
struct HoleReport {
  std::vector<Vertex> cycle;
  int length() const { return static_cast<int>(cycle.size()); }
};

/// Lexicographically least hole with lo <= length <= hi, if any.
std::optional<HoleReport> find_hole_in_range(const Graph& g, int lo, int hi);
/// Checks that the listed vertices induce exactly a cycle in that order.
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

/// Perfect elimination ordering (every vertex's later neighbours form a
/// clique) when g is chordal.
std::optional<std::vector<Vertex>> chordal_decompose(const Graph& g);
/// Largest clique of the form {v} + later neighbours of v along `peo`.
CliqueResult max_clique_from_peo(const Graph& g, std::span<const Vertex> peo);

}  // namespace immlab

#endif  // IMMLAB_ANALYSIS_HPP
