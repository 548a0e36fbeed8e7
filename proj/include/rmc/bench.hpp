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

// Benchmark harness: runs both drivers plus the worst-case and average-case
// baselines over a parameter grid and writes one CSV row per instance.

#ifndef RMC_BENCH_HPP_
#define RMC_BENCH_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmc/instgen.hpp"
#include "rmc/robust.hpp"

namespace rmc {

inline constexpr char kCsvHeader[] =
    "id,k1,k2,d,avg_obj,robust_obj,worst_obj,solved_setf,solved_asf,"
    "time_setf_s,time_asf_s,status";

struct BenchGrid {
  std::vector<Index> num_locations{10};
  Index num_regions = 30;
  std::vector<double> densities{0.2};
  std::vector<std::pair<Count, Count>> ks{{2, 2}};
  std::vector<double> gamma_factors{0.5};
  int replicates = 1;
  Count q = 3;
  std::uint64_t seed = 1;
};

struct BenchSettings {
  RobustOptions robust;  // time limit applies per driver run
  int avg_scenarios = 10;
  int threads = 1;
  bool run_setf = true;
  bool run_asf = true;
};

struct ResultRow {
  std::string id;
  Count k1 = 0;
  Count k2 = 0;
  double d = 0.0;
  std::optional<Count> avg_obj;
  std::optional<Count> robust_obj;
  std::optional<Count> worst_obj;
  bool solved_setf = false;
  bool solved_asf = false;
  double time_setf_s = 0.0;
  double time_asf_s = 0.0;
  std::string status;
};

std::string FormatRow(const ResultRow& row);

// One unit of work: an instance plus its labels.
struct BenchJob {
  std::string id;
  std::string cell;
  Count k1 = 0;
  Count k2 = 0;
  double d = 0.0;
  std::function<Instance()> make;
  std::uint64_t avg_seed = 0;
};

std::vector<BenchJob> GridJobs(const BenchGrid& grid);

ResultRow RunJob(const BenchJob& job, const BenchSettings& settings);

// Runs the jobs on `settings.threads` workers and writes rows in job order.
// Stops taking new jobs once `stop` is set; rows finished in order up to
// that point are still written. Writes per-cell means to `summary` if
// given. Returns the number of rows written.
std::size_t RunBench(const std::vector<BenchJob>& jobs,
                     const BenchSettings& settings, std::ostream& rows,
                     std::ostream* summary, const std::atomic<bool>& stop);

}  // namespace rmc

#endif  // RMC_BENCH_HPP_
