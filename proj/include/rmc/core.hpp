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

// Domain model for the (robust) Min-q-Multiset Multicover problem.
//
// An instance is a bipartite graph between locations I (where suppliers are
// placed) and regions J (which carry client demand). Every supplier serves at
// most q clients in regions adjacent to its location. Under uncertainty the
// demand of region j lies in [a_j, b_j] and the total demand is at most gamma.

#ifndef RMC_CORE_HPP_
#define RMC_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmc {

using Count = std::int64_t;
using Index = int;

// Sorted list of region (or location) indices.
using IndexSet = std::vector<Index>;

enum class ErrorCode {
  kInvalidInstance,
  kBoundViolation,
  kUncoverableRegion,
  kInfeasibleAssignment,
  kTooLarge,
  kEmptySubset,
  kIsolatedVertex,
  kBadParams,
  kNumericalFailure,
  kSolverLimit,
  kParseError,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  Index location;
  Index region;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Instance {
 public:
  Instance() = default;

  // Throws Error(kInvalidInstance) on out-of-range indices, duplicate edges,
  // a_j > b_j, negative values or q < 1.
  Instance(Count q, Index num_locations, std::vector<Count> lower,
           std::vector<Count> upper, Count gamma, std::vector<Edge> edges);

  Count q() const { return q_; }
  Count gamma() const { return gamma_; }
  Index num_locations() const { return num_locations_; }
  Index num_regions() const { return static_cast<Index>(lower_.size()); }

  std::span<const Count> lower() const { return lower_; }
  std::span<const Count> upper() const { return upper_; }
  Count lower(Index j) const { return lower_[j]; }
  Count upper(Index j) const { return upper_[j]; }

  // N(j): sorted locations adjacent to region j.
  std::span<const Index> region_neighbors(Index j) const {
    return region_neighbors_[j];
  }
  // N(i): sorted regions adjacent to location i.
  std::span<const Index> location_neighbors(Index i) const {
    return location_neighbors_[i];
  }
  // Edges ordered by (location, region).
  std::vector<Edge> edges() const;
  std::size_t num_edges() const;
  // Largest location degree; the constant k of the separation models.
  Index max_location_degree() const;

  Count sum_lower() const;
  Count sum_upper() const;

  Instance with_gamma(Count gamma) const;
  Instance with_bounds(std::vector<Count> lower, std::vector<Count> upper,
                       Count gamma) const;
  Instance with_q(Count q) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Count q_ = 1;
  Index num_locations_ = 0;
  std::vector<Count> lower_;
  std::vector<Count> upper_;
  Count gamma_ = 0;
  std::vector<std::vector<Index>> region_neighbors_;
  std::vector<std::vector<Index>> location_neighbors_;
};

struct Scenario {
  std::vector<Count> demand;

  Count total() const;
  bool is_extreme(const Instance& inst) const { return total() == inst.gamma(); }
  // a <= xi <= b and sum(xi) <= gamma.
  bool in_uncertainty_set(const Instance& inst) const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Dense |I| x |J| assignment; y[i][j] clients of region j served from i.
using Assignment = std::vector<std::vector<Count>>;

struct Solution {
  std::vector<Count> x;
  std::vector<std::pair<Scenario, Assignment>> assignments;

  Count objective() const;
};

// Tightens each b_j to min(b_j, gamma - sum_{k != j} a_k). Throws
// kBoundViolation when sum(a) > gamma or gamma > sum(b), and
// kUncoverableRegion when a region with positive (tightened) upper demand has
// no neighbor.
Instance ValidateAndNormalize(const Instance& raw);

bool IsNormalized(const Instance& inst);

// Worst-case total demand of S: min(b(S), gamma - a(J \ S)), clamped at 0.
Count TildeD(const Instance& inst, std::span<const Index> subset);
Count TildeD(const Instance& inst, Count b_of_subset, Count a_of_complement);

// Sum over N(S) of x, each location counted once.
Count CoverCapacity(const Instance& inst, std::span<const Count> x,
                    std::span<const Index> subset);

// tilde_d(S) - q * x(N(S)); positive iff S is violating.
Count ViolationAmount(const Instance& inst, std::span<const Count> x,
                      std::span<const Index> subset);

struct Bounds {
  Count lower = 0;
  Count upper = 0;
};

// ceil(gamma / q) and sum_j ceil(b_j / q).
Bounds TrivialBounds(const Instance& inst);

// The placement achieving the trivial upper bound: ceil(b_j / q) suppliers
// at the smallest-index neighbor of each region.
std::vector<Count> TrivialUpperPlacement(const Instance& inst);

// The scenario with xi_j = b_j, remaining demand at a_k and topped up in
// ascending order to reach gamma. Requires a normalized instance.
Scenario ScenarioAttainingUpper(const Instance& inst, Index region);

inline Count CeilDiv(Count num, Count den) {
  return num <= 0 ? 0 : (num + den - 1) / den;
}

// Bitmask helpers for |J| <= 64.
std::uint64_t ToMask(std::span<const Index> subset);
IndexSet FromMask(std::uint64_t mask);

}  // namespace rmc

#endif  // RMC_CORE_HPP_
