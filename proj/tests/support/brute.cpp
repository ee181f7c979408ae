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

#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace immlab::brute {

namespace {

bool subset_is(const Graph& g, std::uint32_t mask, bool want_edge) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (!(mask >> u & 1)) continue;
    for (int v = u + 1; v < n; ++v) {
      if ((mask >> v & 1) && g.adjacent(u, v) != want_edge) return false;
    }
  }
  return true;
}

int best_subset(const Graph& g, bool want_edge) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    const int c = __builtin_popcount(mask);
    if (c > best && subset_is(g, mask, want_edge)) best = c;
  }
  return best;
}

bool colorable(const Graph& g, int k, std::vector<int>& col, int v) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && col[u] == c);
    if (!ok) continue;
    col[v] = c;
    if (colorable(g, k, col, v + 1)) return true;
  }
  return false;
}

using EdgeKey = std::pair<int, int>;
EdgeKey key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void all_paths(const Graph& g, int at, int target, const std::vector<char>& branch,
               std::vector<int>& path, std::vector<char>& seen,
               std::vector<std::vector<int>>& out) {
  if (at == target) {
    out.push_back(path);
    return;
  }
  for (int y = 0; y < g.order(); ++y) {
    if (!g.adjacent(at, y) || seen[y]) continue;
    if (y != target && branch[y]) continue;
    seen[y] = 1;
    path.push_back(y);
    all_paths(g, y, target, branch, path, seen, out);
    path.pop_back();
    seen[y] = 0;
  }
}

bool assign(const std::vector<std::vector<std::vector<int>>>& options, std::size_t i,
            std::set<EdgeKey>& used) {
  if (i == options.size()) return true;
  for (const auto& p : options[i]) {
    std::vector<EdgeKey> mine;
    bool clash = false;
    for (std::size_t j = 1; j < p.size() && !clash; ++j) {
      const EdgeKey e = key(p[j - 1], p[j]);
      clash = used.count(e) > 0;
      mine.push_back(e);
    }
    if (clash) continue;
    for (const auto& e : mine) used.insert(e);
    if (assign(options, i + 1, used)) return true;
    for (const auto& e : mine) used.erase(e);
  }
  return false;
}

bool branch_set_works(const Graph& g, const std::vector<int>& b) {
  std::vector<char> is_b(static_cast<std::size_t>(g.order()), 0);
  for (int v : b) is_b[v] = 1;
  std::vector<std::vector<std::vector<int>>> options;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      std::vector<std::vector<int>> paths;
      std::vector<int> path{b[i]};
      std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
      seen[b[i]] = 1;
      all_paths(g, b[i], b[j], is_b, path, seen, paths);
      if (paths.empty()) return false;
      options.push_back(std::move(paths));
    }
  }
  std::sort(options.begin(), options.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::set<EdgeKey> used;
  return assign(options, 0, used);
}

}  // namespace

int clique_number(const Graph& g) { return best_subset(g, true); }

int independence_number(const Graph& g) { return best_subset(g, false); }

int chromatic_number(const Graph& g) {
  std::vector<int> col(static_cast<std::size_t>(g.order()), -1);
  for (int k = 0;; ++k) {
    if (colorable(g, k, col, 0)) return k;
  }
}

bool contains_induced(const Graph& g, const Graph& h) {
  const int k = h.order();
  std::vector<int> img(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(img[j], v) == h.adjacent(j, i);
      if (!ok) continue;
      used[v] = 1;
      img[i] = v;
      if (place(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return place(0);
}

bool has_hole_in_range(const Graph& g, int lo, int hi) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int len = __builtin_popcount(mask);
    if (len < lo || len > hi || len < 3) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    bool two_regular = true;
    for (int v : vs) {
      int d = 0;
      for (int u : vs) d += g.adjacent(u, v) ? 1 : 0;
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // Connected 2-regular means a single cycle.
    std::vector<int> stack{vs.front()};
    std::set<int> seen{vs.front()};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : vs) {
        if (g.adjacent(x, y) && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (static_cast<int>(seen.size()) == len) return true;
  }
  return false;
}

bool certificate_ok(const Graph& g, const ImmersionCertificate& c) {
  const int n = g.order();
  std::set<int> branch(c.branch.begin(), c.branch.end());
  if (branch.size() != c.branch.size()) return false;
  for (int b : branch) {
    if (b < 0 || b >= n) return false;
  }
  std::set<EdgeKey> pairs_seen;
  std::set<EdgeKey> edges_seen;
  for (const CertPath& p : c.paths) {
    if (p.walk.size() < 2 || p.walk.front() != p.u || p.walk.back() != p.v) return false;
    if (!branch.count(p.u) || !branch.count(p.v) || p.u == p.v) return false;
    if (!pairs_seen.insert(key(p.u, p.v)).second) return false;
    for (std::size_t i = 1; i + 1 < p.walk.size(); ++i) {
      if (branch.count(p.walk[i])) return false;
    }
    for (std::size_t i = 1; i < p.walk.size(); ++i) {
      const int a = p.walk[i - 1];
      const int b = p.walk[i];
      if (a < 0 || a >= n || b < 0 || b >= n || !g.adjacent(a, b)) return false;
      if (!edges_seen.insert(key(a, b)).second) return false;
    }
  }
  const std::size_t t = branch.size();
  return pairs_seen.size() == t * (t - 1) / 2;
}

bool immerses_clique(const Graph& g, int t) {
  const int n = g.order();
  if (t <= 0) return true;
  if (t > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(t));
  std::function<bool(int, int)> choose = [&](int i, int from) {
    if (i == t) return branch_set_works(g, idx);
    for (int v = from; v < n; ++v) {
      idx[i] = v;
      if (choose(i + 1, v + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

int max_clique_immersion(const Graph& g) {
  int t = 0;
  while (t < g.order() && immerses_clique(g, t + 1)) ++t;
  return t;
}

Graph random_graph(int n, std::uint64_t seed, int num, int den) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, den - 1);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d(rng) < num) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace immlab::brute
