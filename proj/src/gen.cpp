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

#include "immlab/gen.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "immlab/analysis.hpp"
#include "immlab/errors.hpp"
#include "immlab/random.hpp"

namespace immlab {

namespace {

constexpr int kMaxGenOrder = kExactCliqueLimit;

void require_order(int n, int lo, const char* where) {
  if (n < lo || n > kMaxGenOrder) {
    throw PreconditionError(std::string(where) + ": n must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxGenOrder) + "], got " + std::to_string(n));
  }
}

// Generators never self-certify; a failed re-check is a bug here.
void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("generator produced an instance violating: " + what);
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

std::vector<Vertex> shuffled_ids(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<Vertex>(perm));
  return perm;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out.build();
}

// Induced-copy lookup for a small pattern: iso[code] says whether the graph
// on an ordered k-tuple with pair bits `code` is a copy of the pattern.
class PatternTable {
 public:
  explicit PatternTable(const Graph& h) : k_(h.order()) {
    iso_.assign(std::size_t{1} << (k_ * (k_ - 1) / 2), 0);
    std::vector<Vertex> perm(static_cast<std::size_t>(k_));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned code = 0;
      int bit = 0;
      for (int i = 0; i < k_; ++i) {
        for (int j = i + 1; j < k_; ++j, ++bit) {
          if (h.adjacent(perm[i], perm[j])) code |= 1u << bit;
        }
      }
      iso_[code] = 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int k() const { return k_; }

  // True if some induced copy uses both u and v and otherwise only vertices
  // with in_scope set.
  bool through(const Graph& g, Vertex u, Vertex v, const std::vector<char>& in_scope) const {
    std::vector<Vertex> pool;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (x != u && x != v && in_scope[x]) pool.push_back(x);
    }
    std::vector<Vertex> tuple{u, v};
    return extend(g, pool, 0, tuple);
  }

 private:
  bool extend(const Graph& g, const std::vector<Vertex>& pool, std::size_t from,
              std::vector<Vertex>& tuple) const {
    if (static_cast<int>(tuple.size()) == k_) return iso_[code_of(g, tuple)] != 0;
    for (std::size_t i = from; i < pool.size(); ++i) {
      tuple.push_back(pool[i]);
      const bool hit = extend(g, pool, i + 1, tuple);
      tuple.pop_back();
      if (hit) return true;
    }
    return false;
  }

  unsigned code_of(const Graph& g, const std::vector<Vertex>& t) const {
    unsigned code = 0;
    int bit = 0;
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j, ++bit) {
        if (g.adjacent(t[i], t[j])) code |= 1u << bit;
      }
    }
    return code;
  }

  int k_;
  std::vector<char> iso_;
};

bool independent_triple_through(const Graph& g, Vertex u, Vertex v) {
  if (g.adjacent(u, v)) return false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != u && w != v && !g.adjacent(w, u) && !g.adjacent(w, v)) return true;
  }
  return false;
}

// Symmetric toggle chain; `ok` vets the state after toggling (u, v).
void run_chain(GraphBuilder& b, const std::vector<Edge>& pairs, int steps, Rng& rng,
               const std::function<bool(const Graph&, Vertex, Vertex)>& ok) {
  if (pairs.empty()) return;
  for (int s = 0; s < steps; ++s) {
    const Edge e = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
    b.toggle_edge(e.u, e.v);
    if (!ok(b.view(), e.u, e.v)) b.toggle_edge(e.u, e.v);
  }
}

int chain_steps(int n) { return 4 * n * (n - 1) / 2; }

constexpr int kStartTries = 32;

// Inflation of C5 on n >= 5 vertices: every bag starts at 1 and the other
// n - 5 vertices go to uniformly chosen bags.
Graph random_c5_inflation(int n, Rng& rng) {
  std::vector<int> f(5, 1);
  for (int i = 5; i < n; ++i) ++f[static_cast<std::size_t>(rng.below(5))];
  return build_inflation({cycle_graph(5), f}).graph;
}

// Complement of the Wagner graph: K4-free with alpha = 2 on 8 vertices.
Graph wagner_complement(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = std::min(v - u, 8 - (v - u));
      if (d == 2 || d == 3) b.add_edge(u, v);
    }
  }
  return b.build();
}

std::vector<Vertex> shape_vertices(ExtensionShape s) {
  return s == ExtensionShape::kC4 ? std::vector<Vertex>{0, 1, 2, 3}
         : s == ExtensionShape::kC5 ? std::vector<Vertex>{0, 1, 2, 3, 4}
                                    : std::vector<Vertex>{0, 1, 2, 3};
}

bool shape_edge(ExtensionShape s, int i, int j) {
  const int hs = s == ExtensionShape::kC5 ? 5 : 4;
  const int d = std::abs(i - j);
  if (s == ExtensionShape::kP4) return d == 1;
  return d == 1 || d == hs - 1;
}

const char* shape_name(ExtensionShape s) {
  return s == ExtensionShape::kC4 ? "C4" : s == ExtensionShape::kC5 ? "C5" : "P4";
}

}  // namespace

Graph random_alpha2(int n, std::uint64_t seed) {
  require_order(n, 1, "random_alpha2");
  Rng rng(seed);
  std::vector<Edge> pairs = all_pairs(n);
  rng.shuffle(std::span<Edge>(pairs));
  GraphBuilder co(n);
  for (const Edge& e : pairs) {
    if (!rng.coin()) continue;
    bool triangle = false;
    for (Vertex w = 0; w < n && !triangle; ++w) {
      triangle = co.has_edge(e.u, w) && co.has_edge(e.v, w);
    }
    if (!triangle) co.add_edge(e.u, e.v);
  }
  Graph g = complement(co.build());
  ensure(independence_number(g) <= 2, "alpha <= 2");
  return g;
}

Graph random_hfree_alpha2(PatternKind h, int n, std::uint64_t seed, int max_tries) {
  require_order(n, 1, "random_hfree_alpha2");
  const Graph& hg = pattern(h).graph;
  Rng rng(seed);
  // Candidate start states; one valid candidate is picked at random.
  std::vector<Graph> starts;
  const int tries = h == PatternKind::K4 ? max_tries : std::min(max_tries, kStartTries);
  for (int t = 0; t < tries; ++t) {
    Graph cand = random_alpha2(n, rng.next());
    if (is_free_of(cand, h)) {
      starts.push_back(std::move(cand));
      break;
    }
  }
  if (h == PatternKind::K4) {
    if (starts.empty() && n <= 8) starts.push_back(wagner_complement(n));
    if (starts.empty()) {
      throw PreconditionError("random_hfree_alpha2: max_tries (" + std::to_string(max_tries) +
                              ") exhausted for K4 on " + std::to_string(n) +
                              " vertices; K4-free graphs with alpha <= 2 need n <= 8");
    }
  } else {
    if (n >= 5) {
      Graph c5 = random_c5_inflation(n, rng);
      if (is_free_of(c5, h)) starts.push_back(std::move(c5));
    }
    starts.push_back(complete_graph(n));
  }
  GraphBuilder b(starts[static_cast<std::size_t>(rng.below(starts.size()))]);
  const PatternTable table(hg);
  const std::vector<char> everywhere(static_cast<std::size_t>(n), 1);
  run_chain(b, all_pairs(n), chain_steps(n), rng, [&](const Graph& g, Vertex u, Vertex v) {
    return !independent_triple_through(g, u, v) && !table.through(g, u, v, everywhere);
  });
  Graph g = b.build();
  ensure(independence_number(g) <= 2, "alpha <= 2");
  ensure(is_free_of(g, h), std::string(pattern_name(h)) + "-free");
  return g;
}

GeneratedInflation random_inflation(InflationKind kind, int k, int max_bag, std::uint64_t seed) {
  if (max_bag < 1) throw PreconditionError("random_inflation: max_bag must be positive");
  if (kind == InflationKind::kPath && (k < 2 || k % 2 != 0)) {
    throw PreconditionError("random_inflation: path inflations need an even k >= 2");
  }
  if (kind == InflationKind::kCycle && k < 3) {
    throw PreconditionError("random_inflation: cycle inflations need k >= 3");
  }
  Rng rng(seed);
  std::vector<int> f(static_cast<std::size_t>(k));
  for (int& x : f) x = rng.between(1, max_bag);
  if (kind == InflationKind::kPath) {
    int cap = f[k - 1];
    for (int j = 1; j < k - 1; j += 2) cap = std::min(cap, f[j]);
    f[k - 1] = rng.between(1, cap);
    cap = *std::min_element(f.begin() + 1, f.end());
    f[0] = rng.between(1, cap);
  }
  GeneratedInflation out;
  out.spec.base = kind == InflationKind::kPath ? path_graph(k) : cycle_graph(k);
  out.spec.bag_sizes = f;
  out.inflation = build_inflation(out.spec);
  ensure(static_cast<bool>(bag_invariant_check(out.inflation.graph, out.spec.base,
                                               out.inflation.bags)),
         "bag invariants");
  return out;
}

DominatingInstance dominating_family(ExtensionShape shape, int n, std::uint64_t seed) {
  const std::vector<Vertex> hv = shape_vertices(shape);
  const int hs = static_cast<int>(hv.size());
  require_order(n, hs, "dominating_family");
  Rng rng(seed);

  GraphBuilder b(complete_graph(n));
  for (int i = 0; i < hs; ++i) {
    for (int j = i + 1; j < hs; ++j) {
      if (!shape_edge(shape, i, j)) b.remove_edge(i, j);
    }
  }
  // The recursion runs on everything outside a1..a4.
  std::vector<char> sub(static_cast<std::size_t>(n), 1);
  for (Vertex v = 0; v < 4; ++v) sub[v] = 0;
  std::vector<Edge> pairs;
  for (const Edge& e : all_pairs(n)) {
    if (e.v >= hs) pairs.push_back(e);
  }
  const PatternTable owh(pattern(PatternKind::Owh).graph);
  run_chain(b, pairs, chain_steps(n), rng, [&](const Graph& g, Vertex u, Vertex v) {
    if (independent_triple_through(g, u, v)) return false;
    // Outside vertices miss at most one vertex of H.
    if (u < hs) {
      int missed = 0;
      for (Vertex a : hv) missed += g.adjacent(v, a) ? 0 : 1;
      if (missed > 1) return false;
    }
    return !(sub[u] && sub[v] && owh.through(g, u, v, sub));
  });
  const Graph planted = b.build();

  const std::vector<Vertex> perm = shuffled_ids(n, rng);
  DominatingInstance out;
  out.graph = relabel(planted, perm);
  out.shape = shape;
  for (Vertex a : hv) out.h.push_back(perm[a]);

  const Graph& g = out.graph;
  ensure(independence_number(g) <= 2, "alpha <= 2");
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(out.h.begin(), out.h.end(), v) == out.h.end()) rest.push_back(v);
  }
  for (int i = 0; i < hs; ++i) {
    for (int j = i + 1; j < hs; ++j) {
      const bool edge = g.adjacent(out.h[i], out.h[j]);
      ensure(edge == shape_edge(shape, i, j), std::string("induced ") + shape_name(shape));
      if (edge) {
        const Vertex ends[2] = {out.h[i], out.h[j]};
        ensure(dominates(g, ends, rest), "every H-edge dominates G - H");
      }
    }
  }
  const Subgraph part = delete_vertices(g, std::span<const Vertex>(out.h.data(), 4));
  ensure(is_free_of(part.graph, PatternKind::Owh), "recursion part is owh-free");
  return out;
}

ForbholesInstance forbholes_family(int alpha, std::uint64_t seed, const ForbholesOptions& options) {
  if (alpha < 2) throw PreconditionError("forbholes_family: alpha must be at least 2");
  const int len = 2 * alpha + 1;
  Rng rng(seed);
  std::vector<int> f = options.bags;
  if (f.empty()) {
    if (options.max_bag < 1) throw PreconditionError("forbholes_family: max_bag must be positive");
    for (int i = 0; i < len; ++i) f.push_back(rng.between(1, options.max_bag));
  } else if (static_cast<int>(f.size()) != len) {
    throw PreconditionError("forbholes_family: expected " + std::to_string(len) + " bag sizes");
  }
  const int u = options.universal ? *options.universal : rng.between(0, 2);
  if (u < 0) throw PreconditionError("forbholes_family: negative universal count");

  const Inflation inf = build_inflation({cycle_graph(len), f});
  require_order(inf.graph.order() + u, 1, "forbholes_family");
  const Graph joined = u > 0 ? join(inf.graph, complete_graph(u)) : inf.graph;
  const int n = joined.order();
  const std::vector<Vertex> perm = shuffled_ids(n, rng);

  ForbholesInstance out;
  out.graph = relabel(joined, perm);
  for (const VertexSet& bag : inf.bags.bags) {
    VertexSet mapped;
    for (Vertex v : bag) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    out.bags.bags.push_back(mapped);
  }
  for (Vertex v = inf.graph.order(); v < n; ++v) out.universal.push_back(perm[v]);
  std::sort(out.universal.begin(), out.universal.end());

  const Graph& g = out.graph;
  ensure(!find_hole_in_range(g, 4, 2 * alpha), "no hole of length 4.." + std::to_string(2 * alpha));
  ensure(independence_number(g) == alpha, "alpha(G) = " + std::to_string(alpha));
  ensure(static_cast<bool>(bag_invariant_check(g, cycle_graph(len), out.bags, false)),
         "bag invariants");
  for (Vertex b : out.universal) ensure(g.degree(b) == n - 1, "B is universal");
  return out;
}

nlohmann::json gen_spec_to_json(const GenSpec& s) {
  nlohmann::json j{{"family", s.family}, {"n", s.n},         {"seed", s.seed},
                   {"max_tries", s.max_tries}, {"pattern", s.pattern}, {"kind", s.kind},
                   {"k", s.k},           {"max_bag", s.max_bag}, {"alpha", s.alpha},
                   {"bags", s.bags}};
  if (s.universal) j["universal"] = *s.universal;
  return j;
}

GenSpec gen_spec_from_json(const nlohmann::json& j) {
  try {
    GenSpec s;
    s.family = j.at("family").get<std::string>();
    s.n = j.value("n", 0);
    s.seed = j.value("seed", std::uint64_t{0});
    s.max_tries = j.value("max_tries", 1000);
    s.pattern = j.value("pattern", std::string());
    s.kind = j.value("kind", std::string());
    s.k = j.value("k", 0);
    s.max_bag = j.value("max_bag", 3);
    s.alpha = j.value("alpha", 2);
    if (j.contains("universal") && !j.at("universal").is_null()) {
      s.universal = j.at("universal").get<int>();
    }
    s.bags = j.value("bags", std::vector<int>{});
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("gen spec: ") + e.what());
  }
}

GenResult generate(const GenSpec& s) {
  GenResult out;
  nlohmann::json& truth = out.truth;
  truth["spec"] = gen_spec_to_json(s);
  if (s.family == "alpha2") {
    out.graph = random_alpha2(s.n, s.seed);
  } else if (s.family == "hfree") {
    const auto h = parse_pattern(s.pattern);
    if (!h) throw PreconditionError("gen: unknown pattern '" + s.pattern + "'");
    out.graph = random_hfree_alpha2(*h, s.n, s.seed, s.max_tries);
    truth["free_of"] = pattern_name(*h);
  } else if (s.family == "inflation") {
    InflationKind kind;
    if (s.kind == "path") {
      kind = InflationKind::kPath;
    } else if (s.kind == "cycle") {
      kind = InflationKind::kCycle;
    } else {
      throw PreconditionError("gen: inflation kind must be path or cycle");
    }
    const GeneratedInflation gi = random_inflation(kind, s.k, s.max_bag, s.seed);
    out.graph = gi.inflation.graph;
    truth["inflation"] = inflation_spec_to_json(gi.spec);
    truth["bags"] = gi.inflation.bags.bags;
  } else if (s.family == "dominating_c4" || s.family == "dominating_c5" ||
             s.family == "dominating_p4") {
    const ExtensionShape shape = s.family == "dominating_c4"   ? ExtensionShape::kC4
                                 : s.family == "dominating_c5" ? ExtensionShape::kC5
                                                               : ExtensionShape::kP4;
    const DominatingInstance d = dominating_family(shape, s.n, s.seed);
    out.graph = d.graph;
    truth["shape"] = shape_name(shape);
    truth["h"] = d.h;
  } else if (s.family == "forbholes") {
    ForbholesOptions opt;
    opt.max_bag = s.max_bag;
    opt.bags = s.bags;
    opt.universal = s.universal;
    const ForbholesInstance fi = forbholes_family(s.alpha, s.seed, opt);
    out.graph = fi.graph;
    truth["alpha"] = s.alpha;
    truth["bags"] = fi.bags.bags;
    truth["universal"] = fi.universal;
  } else {
    throw PreconditionError("gen: unknown family '" + s.family + "'");
  }
  return out;
}

}  // namespace immlab
