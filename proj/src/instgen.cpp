// Copyright 2026 The rmsmqc Authors
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

#include "rmc/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace rmc {
namespace {

constexpr std::uint64_t kGraphTag = 1;
constexpr std::uint64_t kBoundsTag = 2;

[[noreturn]] void BadParams(const std::string& what) {
  throw Error(ErrorCode::kBadParams, what);
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::Stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ tag);
  h = SplitMix64(h ^ index);
  return Rng(h);
}

Count Rng::UniformInt(Count lo, Count hi) {
  if (hi < lo) BadParams("empty integer range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<Count>(Next());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do {
    r = Next();
  } while (r >= limit);
  return lo + static_cast<Count>(r % range);
}

double Rng::UniformDouble() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

void ValidateGenParams(const GenParams& p) {
  if (p.num_locations < 1 || p.num_regions < 1) {
    BadParams("need at least one location and one region");
  }
  if (!(p.density > 0.0 && p.density <= 1.0)) BadParams("density must be in (0, 1]");
  if (p.num_locations * p.density < 1.0 - 1e-12) {
    BadParams("num_locations * density must be at least 1");
  }
  if (p.k1 < 0 || p.k2 < 1) BadParams("need k1 >= 0 and k2 >= 1");
  if (!(p.gamma_factor >= 0.0 && p.gamma_factor <= 1.0)) {
    BadParams("gamma factor must be in [0, 1]");
  }
  if (p.q < 1) BadParams("q must be positive");
}

Instance RandomInstance(const GenParams& p) {
  ValidateGenParams(p);
  const Index ni = p.num_locations;
  const double extra =
      ni > 1 ? std::clamp((ni * p.density - 1.0) / (ni - 1.0), 0.0, 1.0) : 0.0;

  std::vector<Edge> edges;
  for (Index j = 0; j < p.num_regions; ++j) {
    Rng rng = Rng::Stream(p.seed, kGraphTag, j);
    const Index first = static_cast<Index>(rng.UniformInt(0, ni - 1));
    for (Index i = 0; i < ni; ++i) {
      if (i == first) {
        edges.push_back({i, j});
      } else if (rng.Bernoulli(extra)) {
        edges.push_back({i, j});
      }
    }
  }

  std::vector<Count> a(p.num_regions), b(p.num_regions);
  Count sum_a = 0, sum_b = 0;
  for (Index j = 0; j < p.num_regions; ++j) {
    Rng rng = Rng::Stream(p.seed, kBoundsTag, j);
    a[j] = rng.UniformInt(0, p.k1);
    b[j] = a[j] + rng.UniformInt(1, p.k2);
    sum_a += a[j];
    sum_b += b[j];
  }
  // nearbyint under the default rounding mode rounds half to even.
  const Count gamma =
      sum_a + static_cast<Count>(std::nearbyint(
                  p.gamma_factor * static_cast<double>(sum_b - sum_a)));
  return ValidateAndNormalize(
      Instance(p.q, ni, std::move(a), std::move(b), gamma, std::move(edges)));
}

ExtremeScenarioSampler::ExtremeScenarioSampler(const Instance& inst) {
  const Index nj = inst.num_regions();
  lower_.assign(inst.lower().begin(), inst.lower().end());
  width_.resize(nj);
  for (Index j = 0; j < nj; ++j) width_[j] = inst.upper(j) - inst.lower(j);
  slack_ = inst.gamma() - inst.sum_lower();
  if (slack_ < 0 || slack_ > inst.sum_upper() - inst.sum_lower()) {
    throw Error(ErrorCode::kBoundViolation, "no extreme scenario exists");
  }
  ways_.assign(nj + 1, std::vector<double>(slack_ + 1, 0.0));
  ways_[nj][0] = 1.0;
  for (Index j = nj - 1; j >= 0; --j) {
    auto& row = ways_[j];
    const auto& next = ways_[j + 1];
    for (Count t = 0; t <= slack_; ++t) {
      double sum = 0.0;
      for (Count v = 0; v <= std::min(width_[j], t); ++v) sum += next[t - v];
      row[t] = sum;
    }
    const double top = *std::max_element(row.begin(), row.end());
    if (top > 0.0) {
      for (double& v : row) v /= top;
    }
  }
}

Scenario ExtremeScenarioSampler::Sample(Rng& rng) const {
  const Index nj = static_cast<Index>(width_.size());
  Scenario s;
  s.demand.resize(nj);
  Count left = slack_;
  for (Index j = 0; j < nj; ++j) {
    const auto& next = ways_[j + 1];
    const Count hi = std::min(width_[j], left);
    double total = 0.0;
    for (Count v = 0; v <= hi; ++v) total += next[left - v];
    double r = rng.UniformDouble() * total;
    Count pick = -1;
    for (Count v = 0; v <= hi; ++v) {
      const double w = next[left - v];
      if (w <= 0.0) continue;
      pick = v;
      if (r < w) break;
      r -= w;
    }
    s.demand[j] = lower_[j] + pick;
    left -= pick;
  }
  return s;
}

Scenario RandomExtremeScenario(const Instance& inst, std::uint64_t seed) {
  Rng rng(SplitMix64(seed));
  return ExtremeScenarioSampler(inst).Sample(rng);
}

Instance FromDominatingSet(const GeneralGraph& g, Count q) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, v});
  for (const auto& [u, v] : g.edges()) {
    edges.push_back({u, v});
    edges.push_back({v, u});
  }
  return ValidateAndNormalize(Instance(q, n, std::vector<Count>(n, 0),
                                       std::vector<Count>(n, 1), 1,
                                       std::move(edges)));
}

void WeightedGraph::Validate() const {
  if (num_nodes < 0) throw Error(ErrorCode::kInvalidInstance, "negative node count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= num_nodes || e.v < 0 || e.v >= num_nodes) {
      throw Error(ErrorCode::kInvalidInstance, "edge endpoint out of range");
    }
    if (!(e.weight >= 0.0)) {
      throw Error(ErrorCode::kInvalidInstance, "negative edge weight");
    }
  }
  std::vector<char> seen(num_nodes, 0);
  for (int f : facilities) {
    if (f < 0 || f >= num_nodes) {
      throw Error(ErrorCode::kInvalidInstance, "facility out of range");
    }
    if (seen[f]++) throw Error(ErrorCode::kInvalidInstance, "duplicate facility");
  }
}

std::vector<double> Dijkstra(const WeightedGraph& g, int source) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.num_nodes);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  std::vector<double> dist(g.num_nodes, kInfinity);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.push({dist[v], v});
      }
    }
  }
  return dist;
}

GeoInstance BuildGeoInstance(const WeightedGraph& g, double threshold, Count q,
                             Count gamma, const DemandRule& rule) {
  g.Validate();
  if (!(threshold >= 0.0)) BadParams("threshold must be non-negative");
  const int nf = static_cast<int>(g.facilities.size());
  std::vector<std::vector<Index>> lists(g.num_nodes);
  for (int f = 0; f < nf; ++f) {
    const auto dist = Dijkstra(g, g.facilities[f]);
    for (int v = 0; v < g.num_nodes; ++v) {
      if (dist[v] <= threshold) lists[v].push_back(f);
    }
  }

  GeoInstance out;
  out.region_of_node.assign(g.num_nodes, -1);
  std::map<std::vector<Index>, Index> region_of_list;
  std::vector<std::vector<int>> members;
  std::vector<Edge> edges;
  for (int v = 0; v < g.num_nodes; ++v) {
    if (lists[v].empty()) {
      out.unreached_nodes.push_back(v);
      continue;
    }
    auto [it, fresh] = region_of_list.try_emplace(
        lists[v], static_cast<Index>(members.size()));
    if (fresh) {
      members.emplace_back();
      for (Index f : lists[v]) edges.push_back({f, it->second});
    }
    members[it->second].push_back(v);
    out.region_of_node[v] = it->second;
  }

  const Index nj = static_cast<Index>(members.size());
  std::vector<Count> a(nj, 0), b(nj, 1);
  if (rule) {
    for (Index j = 0; j < nj; ++j) std::tie(a[j], b[j]) = rule(members[j]);
  }
  out.instance = ValidateAndNormalize(
      Instance(q, nf, std::move(a), std::move(b), gamma, std::move(edges)));
  return out;
}

}  // namespace rmc
