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
#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rmc/robust.hpp"

namespace rmc {
namespace {

TEST_CASE("rng: reproducible and in range") {
  Rng a(42), b(42);
  for (int t = 0; t < 1000; ++t) {
    const Count v = a.UniformInt(-3, 5);
    CHECK(v == b.UniformInt(-3, 5));
    CHECK(v >= -3);
    CHECK(v <= 5);
    const double d = a.UniformDouble();
    CHECK(d == b.UniformDouble());
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
  }
  CHECK(Rng::Stream(1, 2, 3).Next() == Rng::Stream(1, 2, 3).Next());
  CHECK(Rng::Stream(1, 2, 3).Next() != Rng::Stream(1, 2, 4).Next());
}

TEST_CASE("generator: parameter validation") {
  GenParams p;
  p.num_locations = 10;
  p.density = 0.05;
  CHECK_THROWS_AS(RandomInstance(p), Error);
  p = {};
  p.gamma_factor = 1.5;
  CHECK_THROWS_AS(RandomInstance(p), Error);
  p = {};
  p.k2 = 0;
  CHECK_THROWS_AS(RandomInstance(p), Error);
}

TEST_CASE("generator: degree one at the minimum density") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams p;
    p.num_locations = 10;
    p.density = 0.1;
    p.seed = seed;
    const auto inst = RandomInstance(p);
    for (Index j = 0; j < inst.num_regions(); ++j) {
      CHECK(inst.region_neighbors(j).size() == 1);
    }
  }
}

TEST_CASE("generator: gamma endpoints and reproducibility") {
  GenParams p;
  p.seed = 9;
  p.k1 = 3;
  p.k2 = 4;
  p.gamma_factor = 0.0;
  const auto lo = RandomInstance(p);
  CHECK(lo.gamma() == lo.sum_lower());
  CHECK(std::ranges::equal(lo.upper(), lo.lower()));
  p.gamma_factor = 1.0;
  const auto hi = RandomInstance(p);
  CHECK(hi.gamma() == hi.sum_upper());
  CHECK(hi.edges() == lo.edges());
  CHECK(RandomInstance(p) == hi);
  // The graph does not depend on the bounds.
  p.k1 = 7;
  CHECK(RandomInstance(p).edges() == hi.edges());
  p.seed = 10;
  CHECK_FALSE(RandomInstance(p) == hi);
}

TEST_CASE("generator: gamma rounds half to even") {
  // Search for seeds where d * (sum b - sum a) ends in .5.
  int seen = 0;
  for (std::uint64_t seed = 1; seed <= 200 && seen < 5; ++seed) {
    GenParams p;
    p.seed = seed;
    p.num_regions = 5;
    p.gamma_factor = 0.5;
    p.k2 = 3;
    GenParams wide = p;
    wide.gamma_factor = 1.0;
    const auto full = RandomInstance(wide);
    const Count spread = full.gamma() - full.sum_lower();
    if (spread % 2 == 0) continue;
    ++seen;
    const Count half = spread / 2;  // x.5 rounds to the even neighbor
    const Count expect = (half % 2 == 0) ? half : half + 1;
    CHECK(RandomInstance(p).gamma() - full.sum_lower() == expect);
  }
  CHECK(seen > 0);
}

TEST_CASE("generator: mean edge count") {
  for (auto [ni, p] : {std::pair{10, 0.2}, std::pair{20, 0.3}}) {
    GenParams g;
    g.num_locations = ni;
    g.num_regions = 30;
    g.density = p;
    double total = 0.0;
    for (int s = 0; s < 1000; ++s) {
      g.seed = 1000 + s;
      total += RandomInstance(g).num_edges();
    }
    const double target = ni * 30 * p;
    CHECK(std::abs(total / 1000 - target) <= 0.02 * target);
  }
}

TEST_CASE("extreme scenarios: examples") {
  Instance fixed(1, 1, {2, 1}, {2, 1}, 3, {{0, 0}, {0, 1}});
  CHECK(RandomExtremeScenario(fixed, 5).demand == std::vector<Count>{2, 1});

  Instance two(1, 1, {0, 0}, {1, 1}, 1, {{0, 0}, {0, 1}});
  int first = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto xi = RandomExtremeScenario(two, s);
    CHECK(xi.is_extreme(two));
    first += xi.demand[0];
  }
  CHECK(first > 900);
  CHECK(first < 1100);
}

TEST_CASE("extreme scenarios: uniform on INST-A") {
  const auto inst = testing::InstA();
  const auto all = testing::AllExtremeScenarios(inst);
  REQUIRE(all.size() == 6);
  const ExtremeScenarioSampler sampler(inst);
  Rng rng(77);
  std::map<std::vector<Count>, int> counts;
  const int draws = 6000;
  for (int t = 0; t < draws; ++t) ++counts[sampler.Sample(rng).demand];
  CHECK(counts.size() == 6);
  double chi2 = 0.0;
  for (const auto& xi : all) {
    const double e = draws / 6.0;
    chi2 += (counts[xi] - e) * (counts[xi] - e) / e;
  }
  // 99.9% quantile of chi-square with 5 degrees of freedom.
  CHECK(chi2 < 20.52);
}

TEST_CASE("extreme scenarios: support on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, {}, (trial % 5) / 4.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto xi = RandomExtremeScenario(inst, s);
      CHECK(xi.is_extreme(inst));
    }
  }
}

std::vector<Index> Nbrs(const Instance& inst, Index j) {
  const auto s = inst.region_neighbors(j);
  return {s.begin(), s.end()};
}

GeneralGraph Path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return GeneralGraph(n, e);
}

TEST_CASE("dominating set instances") {
  const auto p3 = FromDominatingSet(Path(3));
  CHECK(p3.num_locations() == 3);
  CHECK(p3.num_regions() == 3);
  CHECK(p3.num_edges() == 3 + 2 * 2);
  CHECK(p3.gamma() == 1);
  CHECK(SolveSetf(p3).objective() == 1);
  CHECK(SolveSetf(FromDominatingSet(GeneralGraph(1, {}))).objective() == 1);
  const GeneralGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(SolveSetf(FromDominatingSet(c4)).objective() == 2);
  CHECK(SolveAsf(FromDominatingSet(c4)).objective() == 2);
}

TEST_CASE("dominating set: random graphs against brute force") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) e.push_back({u, v});
      }
    }
    const auto inst = FromDominatingSet(GeneralGraph(n, e), 1 + trial % 3);
    CHECK(SolveSetf(inst).objective() == testing::BruteDominationNumber(n, e));
  }
}

TEST_CASE("dijkstra") {
  WeightedGraph g;
  g.num_nodes = 4;
  g.edges = {{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 5.0}};
  const auto d = Dijkstra(g, 0);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 2.0);
  CHECK(d[2] == 4.0);
  CHECK(d[3] == kInfinity);
}

TEST_CASE("geo instances") {
  WeightedGraph star;
  star.num_nodes = 4;
  star.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  star.facilities = {0};
  auto geo = BuildGeoInstance(star, 1.0, 3, 1);
  CHECK(geo.instance.num_regions() == 1);
  CHECK(geo.instance.num_locations() == 1);
  CHECK(geo.unreached_nodes.empty());

  WeightedGraph apart;
  apart.num_nodes = 4;
  apart.edges = {{0, 1, 1.0}, {1, 2, 10.0}, {2, 3, 1.0}};
  apart.facilities = {0, 3};
  geo = BuildGeoInstance(apart, 1.0, 3, 2);
  CHECK(geo.instance.num_regions() == 2);
  CHECK(Nbrs(geo.instance, 0) == std::vector<Index>{0});
  CHECK(Nbrs(geo.instance, 1) == std::vector<Index>{1});

  WeightedGraph path;
  path.num_nodes = 3;
  path.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
  path.facilities = {0, 2};
  geo = BuildGeoInstance(path, 1.0, 3, 1);
  CHECK(geo.instance.num_regions() == 3);
  CHECK(Nbrs(geo.instance, geo.region_of_node[1]) ==
        std::vector<Index>{0, 1});
  CHECK(Nbrs(geo.instance, geo.region_of_node[0]) ==
        std::vector<Index>{0});

  path.edges = {{0, 1, 1.0}};
  path.facilities = {0};
  geo = BuildGeoInstance(path, 1.0, 3, 1);
  CHECK(geo.unreached_nodes == std::vector<int>{2});
  CHECK(geo.region_of_node[2] == -1);

  WeightedGraph bad = path;
  bad.edges.push_back({0, 2, -1.0});
  CHECK_THROWS_AS(BuildGeoInstance(bad, 1.0, 3, 1), Error);

  geo = BuildGeoInstance(star, 1.0, 3, 1,
                         [](const std::vector<int>& nodes) {
                           return std::pair<Count, Count>{0, static_cast<Count>(nodes.size())};
                         });
  CHECK(geo.instance.upper(0) == 1);  // tightened to gamma
}

}  // namespace
}  // namespace rmc
