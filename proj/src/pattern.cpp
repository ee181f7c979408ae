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

#include "immlab/pattern.hpp"

#include <vector>

namespace immlab {

namespace {

constexpr std::array<PatternKind, 10> kAll = {
    PatternKind::K4,    PatternKind::K4minus, PatternKind::C4,
    PatternKind::P4,    PatternKind::Paw,     PatternKind::K3v,
    PatternKind::TwoK2, PatternKind::C5,      PatternKind::House,
    PatternKind::Owh,
};

constexpr std::array<PatternKind, 7> kSeven = {
    PatternKind::K4,  PatternKind::K4minus, PatternKind::C4,   PatternKind::P4,
    PatternKind::Paw, PatternKind::K3v,     PatternKind::TwoK2,
};

std::vector<Pattern> build_catalog() {
  std::vector<Pattern> c;
  c.push_back({PatternKind::K4, "K4",
               Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  c.push_back({PatternKind::K4minus, "K4minus",
               Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})});
  c.push_back({PatternKind::C4, "C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})});
  c.push_back({PatternKind::P4, "P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}})});
  c.push_back({PatternKind::Paw, "paw", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})});
  c.push_back({PatternKind::K3v, "K3v", Graph(4, {{0, 1}, {0, 2}, {1, 2}})});
  c.push_back({PatternKind::TwoK2, "twoK2", Graph(4, {{0, 1}, {2, 3}})});
  c.push_back({PatternKind::C5, "C5",
               Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})});
  c.push_back({PatternKind::House, "house",
               Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}})});
  c.push_back({PatternKind::Owh, "owh",
               Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}})});
  return c;
}

const std::vector<Pattern>& catalog() {
  static const std::vector<Pattern> c = build_catalog();
  return c;
}

}  // namespace

const Pattern& pattern(PatternKind kind) {
  return catalog()[static_cast<std::size_t>(kind)];
}

std::span<const PatternKind> all_patterns() { return kAll; }

std::span<const PatternKind> four_vertex_alpha2_patterns() { return kSeven; }

std::string_view pattern_name(PatternKind kind) { return pattern(kind).name; }

std::optional<PatternKind> parse_pattern(std::string_view name) {
  for (PatternKind k : kAll) {
    if (pattern(k).name == name) return k;
  }
  return std::nullopt;
}

}  // namespace immlab
