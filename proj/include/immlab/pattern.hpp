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

#ifndef IMMLAB_PATTERN_HPP
#define IMMLAB_PATTERN_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "immlab/graph.hpp"

namespace immlab {

enum class PatternKind {
  K4,
  K4minus,
  C4,
  P4,
  Paw,
  K3v,
  TwoK2,
  C5,
  House,
  Owh,
};

/// A named small graph with a fixed vertex labelling.
struct Pattern {
  PatternKind kind;
  std::string_view name;
  Graph graph;
};

/// Catalog entry. The labellings are part of the file-format contract:
///   K4      01 02 03 12 13 23      K4minus 01 02 03 12 13
///   C4      01 12 23 03            P4      01 12 23
///   paw     01 02 12 23            K3v     01 02 12 (+ isolated 3)
///   twoK2   01 23                  C5      01 12 23 34 04
///   house   01 12 23 03 04 14      owh     01 02 12 23 34
const Pattern& pattern(PatternKind kind);

/// All ten catalog entries in declaration order.
std::span<const PatternKind> all_patterns();

/// The seven 4-vertex graphs with independence number at most 2.
std::span<const PatternKind> four_vertex_alpha2_patterns();

std::optional<PatternKind> parse_pattern(std::string_view name);
std::string_view pattern_name(PatternKind kind);

}  // namespace immlab

#endif  // IMMLAB_PATTERN_HPP
