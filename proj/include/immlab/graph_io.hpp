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

#ifndef IMMLAB_GRAPH_IO_HPP
#define IMMLAB_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "immlab/graph.hpp"

namespace immlab {

inline constexpr std::string_view kGraphFormat = "immlab-graph-v1";

/// {"format":"immlab-graph-v1","n":n,"edges":[[u,v],...]}, u < v, sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Canonical text: compact dump of graph_to_json (keys in lexicographic
/// order, no whitespace). This is the byte string that gets hashed.
std::string canonical_graph_text(const Graph& g);

/// Lowercase hex SHA-256 of canonical_graph_text(g).
std::string graph_sha256(const Graph& g);

/// Whitespace-separated edge list: "n m" then m lines "u v".
Graph graph_from_edge_list(std::string_view text);
std::string graph_to_edge_list(const Graph& g);

/// Accepts either format; decides by the first non-space character.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

}  // namespace immlab

#endif  // IMMLAB_GRAPH_IO_HPP
