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

#include "rmc/milp.hpp"

#include <chrono>
#include <cmath>
#include <queue>

#include "rmc/core.hpp"

namespace rmc {

int MilpModel::AddVariable(double cost, double lower, double upper,
                           bool is_integral) {
  integral.push_back(is_integral);
  return lp.AddVariable(cost, lower, upper);
}

int MilpModel::num_integral() const {
  int n = 0;
  for (bool b : integral) n += b ? 1 : 0;
  return n;
}

bool MilpModel::IsFeasible(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != num_variables()) return false;
  for (int j = 0; j < num_variables(); ++j) {
    if (integral[j] && std::abs(x[j] - std::round(x[j])) > kIntegralityTolerance)
      return false;
  }
  return lp.MaxViolation(x) <= 1e-6;
}

const char* MilpStatusName(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal: return "Optimal";
    case MilpStatus::kInfeasible: return "Infeasible";
    case MilpStatus::kUnbounded: return "Unbounded";
    case MilpStatus::kTimeLimit: return "TimeLimit";
  }
  return "Unknown";
}

namespace {

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  double bound;
  int depth;
  std::int64_t seq;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    // priority_queue pops the largest element; invert for best-first.
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const MilpModel& model, const SolveLimits& limits,
                 const MilpOptions& options)
      : model_(model),
        limits_(limits),
        options_(options),
        start_(std::chrono::steady_clock::now()) {}

  MilpOutcome Run();

 private:
  bool OutOfTime() const {
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
    return elapsed >= limits_.time_limit_s;
  }
  // Bound used for ordering and pruning.
  double EffectiveBound(double lp_value) const {
    return model_.objective_integral ? std::ceil(lp_value - 1e-6) : lp_value;
  }
  bool Prunable(double bound) const {
    if (!out_.has_incumbent) return false;
    if (model_.objective_integral) return bound > out_.objective - 1.0 + 1e-6;
    return bound >= out_.objective - limits_.abs_gap;
  }
  void Offer(std::vector<double> x) {
    for (int j = 0; j < model_.num_variables(); ++j) {
      if (model_.integral[j]) x[j] = std::round(x[j]);
    }
    if (!model_.IsFeasible(x)) return;
    double value = model_.lp.Objective(x);
    if (model_.objective_integral) value = std::round(value);
    if (!out_.has_incumbent || value < out_.objective - 1e-9) {
      out_.has_incumbent = true;
      out_.objective = value;
      out_.x = std::move(x);
    }
  }

  const MilpModel& model_;
  const SolveLimits& limits_;
  const MilpOptions& options_;
  std::chrono::steady_clock::time_point start_;
  MilpOutcome out_;
};

MilpOutcome BranchAndBound::Run() {
  model_.lp.Validate();
  if (static_cast<int>(model_.integral.size()) != model_.num_variables()) {
    throw Error(ErrorCode::kInvalidInstance, "integrality marks mismatch");
  }
  if (options_.initial_incumbent) Offer(*options_.initial_incumbent);

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t seq = 0;
  Node root{model_.lp.lower, model_.lp.upper, -kInfinity, 0, seq++};
  for (int j = 0; j < model_.num_variables(); ++j) {
    if (!model_.integral[j]) continue;
    root.lower[j] = std::ceil(root.lower[j] - kIntegralityTolerance);
    root.upper[j] = std::floor(root.upper[j] + kIntegralityTolerance);
  }
  open.push(std::move(root));

  LpModel relaxation = model_.lp;
  bool timed_out = false;
  while (!open.empty()) {
    if (OutOfTime() || out_.nodes >= limits_.node_limit) {
      timed_out = true;
      break;
    }
    Node node = open.top();
    open.pop();
    if (Prunable(node.bound)) {
      // Every remaining node has a bound at least as large.
      while (!open.empty()) open.pop();
      break;
    }
    ++out_.nodes;
    bool empty_box = false;
    for (int j = 0; j < model_.num_variables(); ++j) {
      if (node.lower[j] > node.upper[j]) empty_box = true;
    }
    if (empty_box) continue;
    relaxation.lower = node.lower;
    relaxation.upper = node.upper;
    const LpOutcome lp = SolveLp(relaxation);
    if (lp.status == LpStatus::kInfeasible) continue;
    if (lp.status == LpStatus::kUnbounded) {
      out_.status = MilpStatus::kUnbounded;
      out_.best_bound = -kInfinity;
      return out_;
    }
    const double bound = EffectiveBound(lp.objective);
    if (Prunable(bound)) continue;

    int branch = -1;
    double best_frac = -1.0;
    for (int j = 0; j < model_.num_variables(); ++j) {
      if (!model_.integral[j]) continue;
      const double f = lp.x[j] - std::floor(lp.x[j]);
      const double dist = std::min(f, 1.0 - f);
      if (dist <= kIntegralityTolerance) continue;
      if (dist > best_frac + 1e-12) {
        best_frac = dist;
        branch = j;
      }
    }
    if (branch < 0) {
      Offer(lp.x);
      continue;
    }
    if (options_.rounding) {
      if (auto cand = options_.rounding(lp.x)) Offer(std::move(*cand));
      if (Prunable(bound)) continue;
    }
    const double v = lp.x[branch];
    Node down{node.lower, node.upper, bound, node.depth + 1, seq++};
    down.upper[branch] = std::floor(v);
    Node up{std::move(node.lower), std::move(node.upper), bound,
            node.depth + 1, seq++};
    up.lower[branch] = std::ceil(v);
    open.push(std::move(down));
    open.push(std::move(up));
  }

  if (timed_out) {
    out_.status = MilpStatus::kTimeLimit;
    double bound = out_.has_incumbent ? out_.objective : kInfinity;
    while (!open.empty()) {
      bound = std::min(bound, open.top().bound);
      open.pop();
    }
    out_.best_bound = bound;
    return out_;
  }
  if (!out_.has_incumbent) {
    out_.status = MilpStatus::kInfeasible;
    out_.best_bound = kInfinity;
    return out_;
  }
  out_.status = MilpStatus::kOptimal;
  out_.best_bound = out_.objective;
  return out_;
}

}  // namespace

MilpOutcome SolveMilp(const MilpModel& model, const SolveLimits& limits,
                      const MilpOptions& options) {
  BranchAndBound bb(model, limits, options);
  return bb.Run();
}

}  // namespace rmc
