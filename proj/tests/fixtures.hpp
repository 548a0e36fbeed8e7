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

// Shared test instances and a small random instance source that does not
// depend on the library's own generator.

#ifndef RMC_TESTS_FIXTURES_HPP_
#define RMC_TESTS_FIXTURES_HPP_

#include <random>
#include <vector>

#include "rmc/core.hpp"

namespace rmc::testing {

// Two locations, three regions on a path i1-j1, i1-j2, i2-j2, i2-j3;
// a = 0, b = 2, gamma = 4, q = 3.
inline Instance InstA() {
  return Instance(3, 2, {0, 0, 0}, {2, 2, 2}, 4,
                  {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
}

struct RandomShape {
  int max_locations = 5;
  int max_regions = 7;
  Count max_a = 2;
  Count max_b_increment = 3;
  double edge_prob = 0.4;
  std::vector<Count> qs = {1, 2, 3};
};

// Random normalized instance; every region gets at least one neighbor.
inline Instance RandomInstance(std::mt19937_64& rng, const RandomShape& shape,
                               double gamma_factor) {
  const int ni = 1 + static_cast<int>(rng() % shape.max_locations);
  const int nj = 1 + static_cast<int>(rng() % shape.max_regions);
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int j = 0; j < nj; ++j) {
    const int first = static_cast<int>(rng() % ni);
    for (int i = 0; i < ni; ++i) {
      if (i == first || u(rng) < shape.edge_prob) edges.push_back({i, j});
    }
  }
  std::vector<Count> a(nj), b(nj);
  Count sa = 0, sb = 0;
  for (int j = 0; j < nj; ++j) {
    a[j] = static_cast<Count>(rng() % (shape.max_a + 1));
    b[j] = a[j] + 1 + static_cast<Count>(rng() % shape.max_b_increment);
    sa += a[j];
    sb += b[j];
  }
  const Count gamma =
      sa + static_cast<Count>(std::llround(gamma_factor * double(sb - sa)));
  const Count q = shape.qs[rng() % shape.qs.size()];
  return ValidateAndNormalize(Instance(q, ni, a, b, gamma, edges));
}

inline std::vector<Count> RandomVector(std::mt19937_64& rng, int n, Count max) {
  std::vector<Count> v(n);
  for (auto& e : v) e = static_cast<Count>(rng() % (max + 1));
  return v;
}

}  // namespace rmc::testing

#endif  // RMC_TESTS_FIXTURES_HPP_
