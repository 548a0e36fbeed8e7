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

// Instance factories: the random benchmark generator, uniform sampling of
// extreme scenarios, the dominating-set construction and the travel-time
// (geographic) builder.

#ifndef RMC_INSTGEN_HPP_
#define RMC_INSTGEN_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "rmc/core.hpp"
#include "rmc/nonrobust.hpp"

namespace rmc {

// Seedable generator with reproducible bounded draws. Child streams are
// derived by SplitMix64 mixing of (seed, tag, index), so every decision
// group has its own independent sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng Stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi], unbiased by rejection.
  Count UniformInt(Count lo, Count hi);
  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();
  bool Bernoulli(double p) { return UniformDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

struct GenParams {
  Index num_locations = 10;
  Index num_regions = 30;
  double density = 0.2;
  Count k1 = 2;
  Count k2 = 2;
  double gamma_factor = 0.5;
  Count q = 3;
  std::uint64_t seed = 1;
};

// Throws Error(kBadParams) on invalid parameters.
void ValidateGenParams(const GenParams& params);

// The graph depends only on (seed, num_locations, num_regions, density), so
// instances differing in k1, k2 or gamma_factor share it.
Instance RandomInstance(const GenParams& params);

// Uniform sampler over the integral points of {a <= xi <= b, sum xi = gamma}.
class ExtremeScenarioSampler {
 public:
  explicit ExtremeScenarioSampler(const Instance& inst);
  Scenario Sample(Rng& rng) const;

 private:
  std::vector<Count> lower_;
  std::vector<Count> width_;
  Count slack_;
  // ways_[j][t]: lattice points of regions j.. summing to t above a, each
  // row rescaled by its maximum.
  std::vector<std::vector<double>> ways_;
};

Scenario RandomExtremeScenario(const Instance& inst, std::uint64_t seed);

// Locations and regions are both copies of the vertex set; location u is
// adjacent to region v iff v is in the closed neighborhood of u. a = 0,
// b = 1, gamma = 1.
Instance FromDominatingSet(const GeneralGraph& g, Count q = 1);

struct WeightedGraph {
  struct Arc {
    int u;
    int v;
    double weight;
  };
  int num_nodes = 0;
  std::vector<Arc> edges;
  std::vector<int> facilities;

  // Throws Error(kInvalidInstance) on bad endpoints, negative weights or
  // duplicate facilities.
  void Validate() const;
};

// Shortest travel time from `source` to every node (infinity if unreachable).
std::vector<double> Dijkstra(const WeightedGraph& g, int source);

struct GeoInstance {
  Instance instance;
  // Region of every node, or -1 for nodes no facility reaches.
  std::vector<Index> region_of_node;
  std::vector<int> unreached_nodes;
};

// Demand bounds (a, b) for a region given its member nodes.
using DemandRule =
    std::function<std::pair<Count, Count>(const std::vector<int>& nodes)>;

// Groups nodes by the list of facilities within `threshold`; each group is
// one region adjacent to exactly those facilities. Locations are the
// facilities in the given order. Default bounds are (0, 1).
GeoInstance BuildGeoInstance(const WeightedGraph& g, double threshold, Count q,
                             Count gamma, const DemandRule& rule = {});

}  // namespace rmc

#endif  // RMC_INSTGEN_HPP_
