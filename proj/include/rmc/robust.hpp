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

// Constraint-generation drivers for the robust problem.
//
// setf keeps a master over covering rows sum_{i in N(S)} x_i >= ceil(
// tilde_d(S) / q) for the subsets found so far; asf keeps a master with one
// assignment block y(xi) per scenario found so far. Both alternate between
// solving the master and separating its solution until no violation is left.

#ifndef RMC_ROBUST_HPP_
#define RMC_ROBUST_HPP_

#include <cstdint>
#include <vector>

#include "rmc/core.hpp"
#include "rmc/milp.hpp"

namespace rmc {

enum class Formulation { kSetf, kAsf };
enum class SeparationRoute { kSet, kBigM, kBrute };
enum class RunStatus { kOptimal, kTimeLimit, kInfeasible };

const char* FormulationName(Formulation f);
const char* RunStatusName(RunStatus s);

struct RobustOptions {
  // time_limit_s covers the whole run; node_limit applies per MILP solve.
  SolveLimits limits;
  SeparationRoute route = SeparationRoute::kSet;
  // Cuts added per round; values above 1 re-separate perturbed copies of
  // the master solution.
  int multi_cut = 1;
  // Feed the repaired previous master solution as the initial incumbent.
  bool warm_start = true;
};

struct RobustRun {
  Formulation formulation = Formulation::kSetf;
  RunStatus status = RunStatus::kInfeasible;
  // On kTimeLimit this is the trivial upper placement.
  Solution solution;
  std::vector<IndexSet> subsets;     // setf cuts
  std::vector<Scenario> scenarios;   // asf cuts
  // Master solution of the round that produced each cut, parallel to
  // subsets (setf) or scenarios (asf).
  std::vector<std::vector<Count>> cut_points;
  int iterations = 0;
  double elapsed_s = 0.0;
  Bounds trivial;
  // Largest proven lower bound (master value or ceil(gamma / q)).
  Count lower_bound = 0;

  Count objective() const { return solution.objective(); }
};

// Both expect a normalized instance and throw Error(kUncoverableRegion) if
// a region with positive upper bound has no neighbor.
RobustRun SolveSetf(const Instance& inst, const RobustOptions& options = {});
RobustRun SolveAsf(const Instance& inst, const RobustOptions& options = {});
RobustRun SolveRobust(const Instance& inst, Formulation formulation,
                      const RobustOptions& options = {});

// x is robust feasible iff the set separation model finds no violation.
bool IsRobustFeasible(const Instance& inst, std::span<const Count> x,
                      const SolveLimits& limits = {});

// Deterministic optimum for d = b.
Count WorstCaseValue(const Instance& inst, const SolveLimits& limits = {});

// Lower median of the deterministic optima of `samples` uniform extreme
// scenarios; the draws are reproducible from `seed`.
Count AverageCaseValue(const Instance& inst, int samples, std::uint64_t seed,
                       const SolveLimits& limits = {});

}  // namespace rmc

#endif  // RMC_ROBUST_HPP_
