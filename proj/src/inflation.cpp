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

#include "immlab/inflation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "immlab/graph_io.hpp"

namespace immlab {

using nlohmann::json;

std::vector<int> BagMap::sizes() const {
  std::vector<int> out;
  out.reserve(bags.size());
  for (const VertexSet& b : bags) out.push_back(static_cast<int>(b.size()));
  return out;
}

namespace {

void check_spec(const InflationSpec& spec) {
  if (static_cast<int>(spec.bag_sizes.size()) != spec.base.order()) {
    throw PreconditionError("inflation: " + std::to_string(spec.bag_sizes.size()) +
                            " bag sizes for a base on " +
                            std::to_string(spec.base.order()) + " vertices");
  }
  long long total = 0;
  for (std::size_t i = 0; i < spec.bag_sizes.size(); ++i) {
    if (spec.bag_sizes[i] < 1) {
      throw PreconditionError("inflation: bag " + std::to_string(i) + " has size " +
                              std::to_string(spec.bag_sizes[i]) + "; sizes must be >= 1");
    }
    total += spec.bag_sizes[i];
  }
  if (total > Graph::kMaxVertices) {
    throw PreconditionError("inflation: " + std::to_string(total) + " vertices exceeds limit");
  }
}

using Mask = std::uint32_t;

void maximal_independent_sets(const Graph& base, Mask candidates, Mask excluded,
                              Mask current, std::vector<Mask>& out) {
  if (candidates == 0) {
    if (excluded == 0) out.push_back(current);
    return;
  }
  const int k = base.order();
  std::vector<Mask> non_adj(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) {
    Mask m = 0;
    for (int w = 0; w < k; ++w) {
      if (w != v && !base.adjacent(v, w)) m |= Mask{1} << w;
    }
    non_adj[v] = m;
  }
  // Bron-Kerbosch on the complement, no pivoting; bases are small.
  for (Mask rest = candidates; rest != 0;) {
    const int v = std::countr_zero(rest);
    const Mask bit = Mask{1} << v;
    maximal_independent_sets(base, candidates & non_adj[v], excluded & non_adj[v],
                             current | bit, out);
    candidates &= ~bit;
    excluded |= bit;
    rest &= ~bit;
  }
}

struct DemandHash {
  std::size_t operator()(const std::vector<int>& d) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : d) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

class CoverSearch {
 public:
  CoverSearch(const Graph& base, std::vector<Mask> sets)
      : base_(base), sets_(std::move(sets)), alpha_(0) {
    for (Mask s : sets_) alpha_ = std::max(alpha_, std::popcount(s));
  }

  std::vector<Mask> solve(const std::vector<int>& demand) {
    for (int budget = lower_bound(demand);; ++budget) {
      chosen_.clear();
      if (feasible(demand, budget)) return chosen_;
    }
  }

 private:
  int lower_bound(const std::vector<int>& d) const {
    int total = 0;
    int best = 0;
    const int k = base_.order();
    for (int v = 0; v < k; ++v) {
      total += d[v];
      best = std::max(best, d[v]);
      for (int w = v + 1; w < k; ++w) {
        if (base_.adjacent(v, w)) best = std::max(best, d[v] + d[w]);
      }
    }
    if (alpha_ > 0) best = std::max(best, (total + alpha_ - 1) / alpha_);
    return best;
  }

  bool feasible(const std::vector<int>& d, int budget) {
    int first = -1;
    for (int v = 0; v < base_.order(); ++v) {
      if (d[v] > 0) {
        first = v;
        break;
      }
    }
    if (first < 0) return true;
    if (budget <= 0 || lower_bound(d) > budget) return false;
    auto it = failed_.find(d);
    if (it != failed_.end() && it->second >= budget) return false;

    std::vector<std::pair<int, Mask>> options;
    for (Mask s : sets_) {
      if (!((s >> first) & 1U)) continue;
      int gain = 0;
      for (int v = 0; v < base_.order(); ++v) gain += ((s >> v) & 1U) && d[v] > 0;
      options.push_back({-gain, s});
    }
    std::sort(options.begin(), options.end());
    std::vector<int> next(d);
    for (const auto& [neg_gain, s] : options) {
      for (int v = 0; v < base_.order(); ++v) {
        next[v] = ((s >> v) & 1U) ? std::max(0, d[v] - 1) : d[v];
      }
      chosen_.push_back(s);
      if (feasible(next, budget - 1)) return true;
      chosen_.pop_back();
    }
    int& worst = failed_[d];
    worst = std::max(worst, budget);
    return false;
  }

  const Graph& base_;
  std::vector<Mask> sets_;
  int alpha_;
  std::vector<Mask> chosen_;
  std::unordered_map<std::vector<int>, int, DemandHash> failed_;
};

}  // namespace

Inflation build_inflation(const InflationSpec& spec) {
  check_spec(spec);
  const int k = spec.base.order();
  Inflation out;
  out.bags.bags.resize(static_cast<std::size_t>(k));
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int r = 0; r < spec.bag_sizes[i]; ++r) out.bags.bags[i].push_back(next++);
  }
  GraphBuilder b(next);
  for (int i = 0; i < k; ++i) {
    const VertexSet& bi = out.bags.bags[i];
    for (std::size_t x = 0; x < bi.size(); ++x) {
      for (std::size_t y = x + 1; y < bi.size(); ++y) b.add_edge(bi[x], bi[y]);
    }
    for (int j = i + 1; j < k; ++j) {
      if (!spec.base.adjacent(i, j)) continue;
      for (Vertex x : bi) {
        for (Vertex y : out.bags.bags[j]) b.add_edge(x, y);
      }
    }
  }
  out.graph = b.build();
  return out;
}

Verdict bag_invariant_check(const Graph& g, const Graph& base, const BagMap& m,
                            bool require_cover) {
  if (m.size() != base.order()) {
    return Verdict::fail("bag map has " + std::to_string(m.size()) +
                         " bags for a base on " + std::to_string(base.order()) + " vertices");
  }
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m.size(); ++i) {
    if (m.bags[i].empty()) return Verdict::fail("bag " + std::to_string(i) + " is empty");
    for (Vertex x : m.bags[i]) {
      if (!g.contains(x)) {
        return Verdict::fail("bag " + std::to_string(i) + " holds out-of-range vertex " +
                             std::to_string(x));
      }
      if (owner[x] >= 0) {
        return Verdict::fail("vertex " + std::to_string(x) + " lies in bags " +
                             std::to_string(owner[x]) + " and " + std::to_string(i));
      }
      owner[x] = i;
    }
    if (!is_clique(g, m.bags[i])) {
      return Verdict::fail("bag " + std::to_string(i) + " is not a clique");
    }
  }
  if (require_cover) {
    for (Vertex x = 0; x < g.order(); ++x) {
      if (owner[x] < 0) return Verdict::fail("vertex " + std::to_string(x) + " is in no bag");
    }
  }
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      const bool want = base.adjacent(i, j);
      for (Vertex x : m.bags[i]) {
        for (Vertex y : m.bags[j]) {
          if (g.adjacent(x, y) != want) {
            return Verdict::fail("vertices " + std::to_string(x) + " (bag " +
                                 std::to_string(i) + ") and " + std::to_string(y) +
                                 " (bag " + std::to_string(j) + ") are " +
                                 (want ? "non-adjacent" : "adjacent") + " across " +
                                 (want ? "adjacent" : "non-adjacent") + " bags");
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Coloring inflation_chromatic_number(const InflationSpec& spec) {
  check_spec(spec);
  const int k = spec.base.order();
  if (k > 24) {
    throw PreconditionError("inflation_chromatic_number: base limited to 24 vertices");
  }
  if (k == 0) return {};
  std::vector<Mask> sets;
  maximal_independent_sets(spec.base, (Mask{1} << k) - 1, 0, 0, sets);
  const std::vector<Mask> cover = CoverSearch(spec.base, sets).solve(spec.bag_sizes);

  Coloring out;
  const int n = std::accumulate(spec.bag_sizes.begin(), spec.bag_sizes.end(), 0);
  out.color.assign(static_cast<std::size_t>(n), -1);
  int offset = 0;
  for (int i = 0; i < k; ++i) {
    int r = 0;
    for (std::size_t c = 0; c < cover.size() && r < spec.bag_sizes[i]; ++c) {
      if ((cover[c] >> i) & 1U) out.color[offset + r++] = static_cast<int>(c);
    }
    offset += spec.bag_sizes[i];
  }
  out.colors = static_cast<int>(cover.size());
  return out;
}

json inflation_spec_to_json(const InflationSpec& spec) {
  return json{{"format", kInflationFormat},
              {"base", graph_to_json(spec.base)},
              {"f", spec.bag_sizes}};
}

InflationSpec inflation_spec_from_json(const json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != kInflationFormat) {
      throw PreconditionError("inflation JSON must carry format \"" +
                              std::string(kInflationFormat) + "\"");
    }
    InflationSpec spec{graph_from_json(j.at("base")), j.at("f").get<std::vector<int>>()};
    check_spec(spec);
    return spec;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("malformed inflation JSON: ") + ex.what());
  }
}

}  // namespace immlab
