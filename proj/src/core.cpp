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

#include "rmc/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rmc {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kUncoverableRegion: return "UncoverableRegion";
    case ErrorCode::kInfeasibleAssignment: return "InfeasibleAssignment";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kSolverLimit: return "SolverLimit";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void Invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidInstance, msg);
}

}  // namespace

Instance::Instance(Count q, Index num_locations, std::vector<Count> lower,
                   std::vector<Count> upper, Count gamma,
                   std::vector<Edge> edges)
    : q_(q),
      num_locations_(num_locations),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      gamma_(gamma) {
  if (q_ < 1) Invalid("q must be positive");
  if (num_locations_ < 0) Invalid("negative location count");
  if (gamma_ < 0) Invalid("gamma must be non-negative");
  if (lower_.size() != upper_.size()) Invalid("lower/upper length mismatch");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (lower_[j] < 0 || lower_[j] > upper_[j]) {
      std::ostringstream os;
      os << "region " << j << ": need 0 <= a <= b, got a=" << lower_[j]
         << " b=" << upper_[j];
      Invalid(os.str());
    }
  }
  region_neighbors_.assign(lower_.size(), {});
  location_neighbors_.assign(num_locations_, {});
  for (const Edge& e : edges) {
    if (e.location < 0 || e.location >= num_locations_ || e.region < 0 ||
        e.region >= num_regions()) {
      std::ostringstream os;
      os << "edge (" << e.location << ", " << e.region << ") out of range";
      Invalid(os.str());
    }
    region_neighbors_[e.region].push_back(e.location);
    location_neighbors_[e.location].push_back(e.region);
  }
  for (auto& adj : region_neighbors_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      Invalid("duplicate edge");
    }
  }
  for (auto& adj : location_neighbors_) std::sort(adj.begin(), adj.end());
}

std::vector<Edge> Instance::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Index i = 0; i < num_locations_; ++i) {
    for (Index j : location_neighbors_[i]) out.push_back({i, j});
  }
  return out;
}

std::size_t Instance::num_edges() const {
  std::size_t n = 0;
  for (const auto& adj : location_neighbors_) n += adj.size();
  return n;
}

Index Instance::max_location_degree() const {
  std::size_t k = 0;
  for (const auto& adj : location_neighbors_) k = std::max(k, adj.size());
  return static_cast<Index>(k);
}

Count Instance::sum_lower() const {
  return std::accumulate(lower_.begin(), lower_.end(), Count{0});
}

Count Instance::sum_upper() const {
  return std::accumulate(upper_.begin(), upper_.end(), Count{0});
}

Instance Instance::with_gamma(Count gamma) const {
  return with_bounds(lower_, upper_, gamma);
}

Instance Instance::with_bounds(std::vector<Count> lower,
                               std::vector<Count> upper, Count gamma) const {
  return Instance(q_, num_locations_, std::move(lower), std::move(upper),
                  gamma, edges());
}

Instance Instance::with_q(Count q) const {
  return Instance(q, num_locations_, lower_, upper_, gamma_, edges());
}

Count Scenario::total() const {
  return std::accumulate(demand.begin(), demand.end(), Count{0});
}

bool Scenario::in_uncertainty_set(const Instance& inst) const {
  if (static_cast<Index>(demand.size()) != inst.num_regions()) return false;
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (demand[j] < inst.lower(j) || demand[j] > inst.upper(j)) return false;
  }
  return total() <= inst.gamma();
}

Count Solution::objective() const {
  return std::accumulate(x.begin(), x.end(), Count{0});
}

Instance ValidateAndNormalize(const Instance& raw) {
  const Count sum_a = raw.sum_lower();
  const Count sum_b = raw.sum_upper();
  if (sum_a > raw.gamma()) {
    std::ostringstream os;
    os << "sum of lower demands " << sum_a << " exceeds gamma " << raw.gamma();
    throw Error(ErrorCode::kBoundViolation, os.str());
  }
  if (raw.gamma() > sum_b) {
    std::ostringstream os;
    os << "gamma " << raw.gamma() << " exceeds sum of upper demands " << sum_b;
    throw Error(ErrorCode::kBoundViolation, os.str());
  }
  std::vector<Count> lower(raw.lower().begin(), raw.lower().end());
  std::vector<Count> upper(raw.upper().begin(), raw.upper().end());
  for (Index j = 0; j < raw.num_regions(); ++j) {
    upper[j] = std::min(upper[j], raw.gamma() - (sum_a - lower[j]));
    if (upper[j] > 0 && raw.region_neighbors(j).empty()) {
      std::ostringstream os;
      os << "region " << j << " has demand up to " << upper[j]
         << " but no adjacent location";
      throw Error(ErrorCode::kUncoverableRegion, os.str());
    }
  }
  return raw.with_bounds(std::move(lower), std::move(upper), raw.gamma());
}

bool IsNormalized(const Instance& inst) {
  const Count sum_a = inst.sum_lower();
  if (sum_a > inst.gamma() || inst.gamma() > inst.sum_upper()) return false;
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (inst.upper(j) + sum_a - inst.lower(j) > inst.gamma()) return false;
  }
  return true;
}

Count TildeD(const Instance& inst, Count b_of_subset, Count a_of_complement) {
  return std::max<Count>(
      0, std::min(b_of_subset, inst.gamma() - a_of_complement));
}

Count TildeD(const Instance& inst, std::span<const Index> subset) {
  Count b_s = 0;
  Count a_s = 0;
  for (Index j : subset) {
    b_s += inst.upper(j);
    a_s += inst.lower(j);
  }
  return TildeD(inst, b_s, inst.sum_lower() - a_s);
}

Count CoverCapacity(const Instance& inst, std::span<const Count> x,
                    std::span<const Index> subset) {
  std::vector<char> seen(inst.num_locations(), 0);
  Count total = 0;
  for (Index j : subset) {
    for (Index i : inst.region_neighbors(j)) {
      if (!seen[i]) {
        seen[i] = 1;
        total += x[i];
      }
    }
  }
  return total;
}

Count ViolationAmount(const Instance& inst, std::span<const Count> x,
                      std::span<const Index> subset) {
  return TildeD(inst, subset) - inst.q() * CoverCapacity(inst, x, subset);
}

Bounds TrivialBounds(const Instance& inst) {
  Bounds out;
  out.lower = CeilDiv(inst.gamma(), inst.q());
  for (Count b : inst.upper()) out.upper += CeilDiv(b, inst.q());
  return out;
}

std::vector<Count> TrivialUpperPlacement(const Instance& inst) {
  std::vector<Count> x(inst.num_locations(), 0);
  for (Index j = 0; j < inst.num_regions(); ++j) {
    const Count need = CeilDiv(inst.upper(j), inst.q());
    if (need == 0) continue;
    auto nbrs = inst.region_neighbors(j);
    if (nbrs.empty()) {
      throw Error(ErrorCode::kUncoverableRegion,
                  "region " + std::to_string(j) + " has no neighbor");
    }
    x[nbrs.front()] += need;
  }
  return x;
}

Scenario ScenarioAttainingUpper(const Instance& inst, Index region) {
  Scenario s{std::vector<Count>(inst.lower().begin(), inst.lower().end())};
  s.demand[region] = inst.upper(region);
  Count remaining = inst.gamma() - s.total();
  for (Index j = 0; j < inst.num_regions() && remaining > 0; ++j) {
    const Count add = std::min(remaining, inst.upper(j) - s.demand[j]);
    s.demand[j] += add;
    remaining -= add;
  }
  return s;
}

std::uint64_t ToMask(std::span<const Index> subset) {
  std::uint64_t mask = 0;
  for (Index j : subset) mask |= std::uint64_t{1} << j;
  return mask;
}

IndexSet FromMask(std::uint64_t mask) {
  IndexSet out;
  for (Index j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1) out.push_back(j);
  }
  return out;
}

}  // namespace rmc
