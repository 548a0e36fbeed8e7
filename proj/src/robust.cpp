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

#include "rmc/robust.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <set>

#include "rmc/flow.hpp"
#include "rmc/instgen.hpp"
#include "rmc/nonrobust.hpp"
#include "rmc/separation.hpp"

namespace rmc {
namespace {

constexpr std::uint64_t kAverageTag = 3;

class Clock {
 public:
  explicit Clock(double limit_s)
      : start_(std::chrono::steady_clock::now()), limit_(limit_s) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  double remaining() const { return limit_ - elapsed(); }
  bool expired() const { return remaining() <= 0.0; }

 private:
  std::chrono::steady_clock::time_point start_;
  double limit_;
};

struct OutOfTime {};

SolveLimits Remaining(const Clock& clock, const SolveLimits& base) {
  if (clock.expired()) throw OutOfTime{};
  SolveLimits l = base;
  l.time_limit_s = clock.remaining();
  return l;
}

std::vector<Count> RoundVector(const std::vector<double>& v, int count) {
  std::vector<Count> out(count);
  for (int i = 0; i < count; ++i) out[i] = static_cast<Count>(std::llround(v[i]));
  return out;
}

IndexSet Neighborhood(const Instance& inst, std::span<const Index> subset) {
  std::vector<char> in(inst.num_locations(), 0);
  for (Index j : subset) {
    for (Index i : inst.region_neighbors(j)) in[i] = 1;
  }
  IndexSet out;
  for (Index i = 0; i < inst.num_locations(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

std::optional<Violation> Separate(const Instance& inst,
                                  std::span<const Count> x,
                                  SeparationRoute route,
                                  const SolveLimits& limits) {
  switch (route) {
    case SeparationRoute::kSet:
      return SeparateSet(inst, x, limits);
    case SeparationRoute::kBigM:
      return SeparateBigM(inst, x, limits);
    case SeparationRoute::kBrute:
      return SeparateBrute(inst, x);
  }
  return std::nullopt;
}

// Up to `count` distinct violations: after each one the point is pushed
// out of it by adding ceil(amount / q) suppliers at the first location of
// N(S), and separated again.
std::vector<Violation> SeparateMany(const Instance& inst,
                                    std::vector<Count> x,
                                    const RobustOptions& options,
                                    const Clock& clock) {
  std::vector<Violation> found;
  std::set<IndexSet> seen;
  for (int round = 0; round < std::max(1, options.multi_cut); ++round) {
    auto v = Separate(inst, x, options.route, Remaining(clock, options.limits));
    if (!v || !seen.insert(v->subset).second) break;
    const IndexSet nbr = Neighborhood(inst, v->subset);
    x[nbr.front()] += CeilDiv(v->amount, inst.q());
    found.push_back(std::move(*v));
  }
  return found;
}

void Finish(RobustRun& run, const Instance& inst, const Clock& clock) {
  run.elapsed_s = clock.elapsed();
  if (run.status == RunStatus::kTimeLimit) {
    run.solution = Solution{TrivialUpperPlacement(inst), {}};
  }
}

RobustRun StartRun(const Instance& inst, Formulation f) {
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (inst.upper(j) > 0 && inst.region_neighbors(j).empty()) {
      throw Error(ErrorCode::kUncoverableRegion,
                  "region " + std::to_string(j) + " has no neighbor");
    }
  }
  RobustRun run;
  run.formulation = f;
  run.trivial = TrivialBounds(inst);
  run.lower_bound = run.trivial.lower;
  return run;
}

void AddSupplierVariables(const Instance& inst, MilpModel& m, Count upper) {
  for (Index i = 0; i < inst.num_locations(); ++i) {
    m.AddVariable(1.0, 0.0, static_cast<double>(upper), true);
  }
  m.objective_integral = true;
}

}  // namespace

const char* FormulationName(Formulation f) {
  return f == Formulation::kSetf ? "setf" : "asf";
}

const char* RunStatusName(RunStatus s) {
  switch (s) {
    case RunStatus::kOptimal:
      return "Optimal";
    case RunStatus::kTimeLimit:
      return "TimeLimit";
    case RunStatus::kInfeasible:
      return "Infeasible";
  }
  return "?";
}

RobustRun SolveSetf(const Instance& inst, const RobustOptions& options) {
  const Clock clock(options.limits.time_limit_s);
  RobustRun run = StartRun(inst, Formulation::kSetf);
  const Index ni = inst.num_locations();
  const Count q = inst.q();

  MilpModel master;
  AddSupplierVariables(inst, master, run.trivial.upper);
  std::set<IndexSet> seen;
  std::vector<Count> x;
  std::optional<std::vector<Count>> warm;

  try {
    while (true) {
      ++run.iterations;
      MilpOptions mo;
      if (warm) mo.initial_incumbent = std::vector<double>(warm->begin(), warm->end());
      const MilpOutcome out =
          SolveMilp(master, Remaining(clock, options.limits), mo);
      if (out.status != MilpStatus::kOptimal) throw OutOfTime{};
      x = RoundVector(out.x, ni);
      run.lower_bound = std::max(
          run.lower_bound, static_cast<Count>(std::llround(out.objective)));

      const auto cuts = SeparateMany(inst, x, options, clock);
      if (cuts.empty()) break;
      std::vector<Count> repaired = x;
      for (const Violation& v : cuts) {
        if (!seen.insert(v.subset).second) {
          throw Error(ErrorCode::kNumericalFailure,
                      "separation returned a subset already in the master");
        }
        const IndexSet nbr = Neighborhood(inst, v.subset);
        const Count need = CeilDiv(TildeD(inst, v.subset), q);
        std::vector<LinearTerm> row;
        Count have = 0;
        for (Index i : nbr) {
          row.push_back({i, 1.0});
          have += repaired[i];
        }
        master.AddRow(std::move(row), Relation::kGreaterEqual,
                      static_cast<double>(need));
        if (have < need) repaired[nbr.front()] += need - have;
        run.subsets.push_back(v.subset);
        run.cut_points.push_back(x);
      }
      if (options.warm_start) warm = std::move(repaired);
    }
    run.status = RunStatus::kOptimal;
    run.solution = Solution{x, {}};
  } catch (const OutOfTime&) {
    run.status = RunStatus::kTimeLimit;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSolverLimit) throw;
    run.status = RunStatus::kTimeLimit;
  }
  Finish(run, inst, clock);
  return run;
}

RobustRun SolveAsf(const Instance& inst, const RobustOptions& options) {
  const Clock clock(options.limits.time_limit_s);
  RobustRun run = StartRun(inst, Formulation::kAsf);
  const Index ni = inst.num_locations();
  const Index nj = inst.num_regions();
  const double q = static_cast<double>(inst.q());

  MilpModel master;
  AddSupplierVariables(inst, master, run.trivial.upper);
  std::vector<Count> x;
  std::optional<std::vector<Count>> warm;

  // One full |I| x |J| block per scenario; y(i, j) for non-edges appears in
  // no row.
  auto add_block = [&](const Scenario& xi) {
    const int base = master.num_variables();
    for (Index i = 0; i < ni; ++i) {
      for (Index j = 0; j < nj; ++j) master.AddVariable(0.0, 0.0, kInfinity, false);
    }
    for (Index j = 0; j < nj; ++j) {
      std::vector<LinearTerm> row;
      for (Index i : inst.region_neighbors(j)) row.push_back({base + i * nj + j, 1.0});
      master.AddRow(std::move(row), Relation::kGreaterEqual,
                    static_cast<double>(xi.demand[j]));
    }
    for (Index i = 0; i < ni; ++i) {
      std::vector<LinearTerm> row{{i, -q}};
      for (Index j : inst.location_neighbors(i)) row.push_back({base + i * nj + j, 1.0});
      master.AddRow(std::move(row), Relation::kLessEqual, 0.0);
    }
  };

  // Incumbent for the master: x raised until it serves every scenario, with
  // the flow assignments filled in.
  auto incumbent = [&](std::vector<Count> xs) {
    for (const Scenario& xi : run.scenarios) {
      while (auto s = ViolatedSubsetFromCut(inst, xs, xi.demand)) {
        Count need = 0;
        for (Index j : *s) need += xi.demand[j];
        const Count gap = need - inst.q() * CoverCapacity(inst, xs, *s);
        xs[Neighborhood(inst, *s).front()] += CeilDiv(gap, inst.q());
      }
    }
    std::vector<double> full(xs.begin(), xs.end());
    for (const Scenario& xi : run.scenarios) {
      const Assignment y = RecoverAssignment(inst, xs, xi.demand);
      for (Index i = 0; i < ni; ++i) {
        for (Index j = 0; j < nj; ++j) full.push_back(static_cast<double>(y[i][j]));
      }
    }
    return full;
  };

  try {
    while (true) {
      ++run.iterations;
      MilpOptions mo;
      if (warm) mo.initial_incumbent = incumbent(*warm);
      const MilpOutcome out =
          SolveMilp(master, Remaining(clock, options.limits), mo);
      if (out.status != MilpStatus::kOptimal) throw OutOfTime{};
      x = RoundVector(out.x, ni);
      run.lower_bound = std::max(
          run.lower_bound, static_cast<Count>(std::llround(out.objective)));

      const auto cuts = SeparateMany(inst, x, options, clock);
      if (cuts.empty()) break;
      const std::size_t before = run.scenarios.size();
      for (const Violation& v : cuts) {
        Scenario xi = v.witness ? *v.witness : ScenarioFromSubset(inst, v.subset);
        if (std::find(run.scenarios.begin(), run.scenarios.end(), xi) !=
            run.scenarios.end()) {
          continue;
        }
        add_block(xi);
        run.scenarios.push_back(std::move(xi));
        run.cut_points.push_back(x);
      }
      if (run.scenarios.size() == before) {
        throw Error(ErrorCode::kNumericalFailure,
                    "separation returned a scenario already in the master");
      }
      if (options.warm_start) warm = x;
    }
    run.status = RunStatus::kOptimal;
    Solution sol{x, {}};
    for (const Scenario& xi : run.scenarios) {
      sol.assignments.emplace_back(xi, RecoverAssignment(inst, x, xi.demand));
    }
    run.solution = std::move(sol);
  } catch (const OutOfTime&) {
    run.status = RunStatus::kTimeLimit;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSolverLimit) throw;
    run.status = RunStatus::kTimeLimit;
  }
  Finish(run, inst, clock);
  return run;
}

RobustRun SolveRobust(const Instance& inst, Formulation formulation,
                      const RobustOptions& options) {
  return formulation == Formulation::kSetf ? SolveSetf(inst, options)
                                           : SolveAsf(inst, options);
}

bool IsRobustFeasible(const Instance& inst, std::span<const Count> x,
                      const SolveLimits& limits) {
  return !SeparateSet(inst, x, limits).has_value();
}

Count WorstCaseValue(const Instance& inst, const SolveLimits& limits) {
  return SolveExact(inst, inst.upper(), limits).objective();
}

Count AverageCaseValue(const Instance& inst, int samples, std::uint64_t seed,
                       const SolveLimits& limits) {
  if (samples < 1) throw Error(ErrorCode::kBadParams, "need at least one sample");
  const ExtremeScenarioSampler sampler(inst);
  std::vector<Count> values;
  for (int t = 0; t < samples; ++t) {
    Rng rng = Rng::Stream(seed, kAverageTag, t);
    const Scenario xi = sampler.Sample(rng);
    values.push_back(SolveExact(inst, xi.demand, limits).objective());
  }
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace rmc
