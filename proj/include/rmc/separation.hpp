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

// Separation: given a supplier vector x, find a region subset S whose
// worst-case demand exceeds what x can serve, i.e.
//   amount(S) = tilde_d(S) - q * x(N(S)) > 0,
// or prove none exists. Three routes are provided (enumeration, the set
// separation MILP and the Big-M scenario MILP) together with the maps
// between violating subsets and violating scenarios.

#ifndef RMC_SEPARATION_HPP_
#define RMC_SEPARATION_HPP_

#include <optional>
#include <span>

#include "rmc/core.hpp"
#include "rmc/milp.hpp"

namespace rmc {

struct Violation {
  IndexSet subset;
  Count amount = 0;
  // Extreme scenario with demand tilde_d(subset) on the subset.
  std::optional<Scenario> witness;
};

// Largest number of regions the enumeration route accepts.
inline constexpr Index kMaxBruteRegions = 25;

// Most violated subset by Gray-code enumeration. Among maximizers the subset
// whose indicator vector (z_0, z_1, ...) is lexicographically largest wins.
// Throws Error(kTooLarge) above kMaxBruteRegions regions.
std::optional<Violation> SeparateBrute(const Instance& inst,
                                       std::span<const Count> x);

// Variables: y_i (binary, ids 0..|I|-1), z_j (binary, ids |I|..|I|+|J|-1),
// d (continuous, last id). Rows: d <= b.z, d <= gamma' + a.z, then
// k * y_i >= sum_{j in N(i)} z_j for every location.
MilpModel BuildSetSeparationModel(const Instance& inst,
                                  std::span<const Count> x);

// Solves the set separation model; throws Error(kSolverLimit) if the limits
// stop it early.
std::optional<Violation> SeparateSet(const Instance& inst,
                                     std::span<const Count> x,
                                     const SolveLimits& limits = {});

// Variables: mu_i (binary), nu_j (binary), omega_j (continuous),
// xi_j (integral in [a_j, b_j]), in that order. Rows: k * mu_i >= sum nu_j,
// omega_j <= xi_j, omega_j <= gamma * nu_j, sum xi = gamma.
MilpModel BuildBigMSeparationModel(const Instance& inst,
                                   std::span<const Count> x);

// Solves the Big-M model; the witness is the scenario read from xi.
std::optional<Violation> SeparateBigM(const Instance& inst,
                                      std::span<const Count> x,
                                      const SolveLimits& limits = {});

// Extreme scenario whose demand on `subset` equals tilde_d(subset).
// Throws Error(kEmptySubset) for an empty subset.
Scenario ScenarioFromSubset(const Instance& inst,
                            std::span<const Index> subset);

// Violating subset certified by a minimum cut for the scenario, if any.
std::optional<Violation> SubsetFromScenario(const Instance& inst,
                                            std::span<const Count> x,
                                            const Scenario& scenario);

}  // namespace rmc

#endif  // RMC_SEPARATION_HPP_
