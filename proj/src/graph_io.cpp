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

#include "immlab/graph_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "immlab/errors.hpp"

namespace immlab {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"format", kGraphFormat}, {"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != kGraphFormat) {
      throw PreconditionError("graph JSON must carry format \"" +
                              std::string(kGraphFormat) + "\"");
    }
    const int n = j.at("n").get<int>();
    GraphBuilder b(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw PreconditionError("graph edge must be a pair [u,v]");
      }
      b.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return b.build();
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("malformed graph JSON: ") + ex.what());
  }
}

std::string canonical_graph_text(const Graph& g) {
  return graph_to_json(g).dump();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string graph_sha256(const Graph& g) {
  return sha256_hex(canonical_graph_text(g));
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw PreconditionError("edge list must start with \"n m\"");
  }
  if (n > Graph::kMaxVertices) {
    throw PreconditionError("edge list declares too many vertices");
  }
  GraphBuilder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw PreconditionError("edge list ended after " + std::to_string(i) +
                              " of " + std::to_string(m) + " edges");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge list vertex out of range");
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw PreconditionError("trailing data after edge list");
  return b.build();
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& ex) {
        throw PreconditionError(std::string("graph JSON parse error: ") +
                                ex.what());
      }
      return graph_from_json(j);
    }
    break;
  }
  return graph_from_edge_list(text);
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(slurp(path));
}

json read_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& ex) {
    throw PreconditionError(path.string() + ": " + ex.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace immlab
