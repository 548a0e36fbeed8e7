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

#include "rmc/bench.hpp"

#include <cmath>
#include <condition_variable>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace rmc {
namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t v) {
  return SplitMix64(h ^ SplitMix64(v));
}

std::uint64_t Micro(double v) {
  return static_cast<std::uint64_t>(std::llround(v * 1e6));
}

std::string Opt(const std::optional<Count>& v) {
  return v ? std::to_string(*v) : std::string();
}

struct CellStats {
  Count k1 = 0, k2 = 0;
  double d = 0.0;
  int rows = 0, solved_setf = 0, solved_asf = 0, complete = 0;
  double avg = 0, robust = 0, worst = 0, time_setf = 0, time_asf = 0;
};

void WriteSummary(std::ostream& out,
                  const std::vector<std::pair<std::string, CellStats>>& cells) {
  out << "cell,k1,k2,d,instances,solved_setf,solved_asf,avg_obj_mean,"
         "robust_obj_mean,worst_obj_mean,time_setf_mean_s,time_asf_mean_s\n";
  for (const auto& [name, c] : cells) {
    auto mean = [&](double total, int n) {
      return n > 0 ? fmt::format("{:.2f}", total / n) : std::string();
    };
    out << fmt::format("{},{},{},{:.2f},{},{},{},{},{},{},{},{}\n", name, c.k1,
                       c.k2, c.d, c.rows, c.solved_setf, c.solved_asf,
                       mean(c.avg, c.complete), mean(c.robust, c.complete),
                       mean(c.worst, c.complete),
                       mean(c.time_setf, c.solved_setf),
                       mean(c.time_asf, c.solved_asf));
  }
  out.flush();
}

}  // namespace

std::string FormatRow(const ResultRow& r) {
  return fmt::format("{},{},{},{:.2f},{},{},{},{},{},{:.2f},{:.2f},{}", r.id,
                     r.k1, r.k2, r.d, Opt(r.avg_obj), Opt(r.robust_obj),
                     Opt(r.worst_obj), r.solved_setf ? 1 : 0,
                     r.solved_asf ? 1 : 0, r.time_setf_s, r.time_asf_s,
                     r.status);
}

std::vector<BenchJob> GridJobs(const BenchGrid& grid) {
  if (grid.replicates < 1 || grid.num_locations.empty() ||
      grid.densities.empty() || grid.ks.empty() || grid.gamma_factors.empty()) {
    throw Error(ErrorCode::kBadParams, "empty benchmark grid");
  }
  std::vector<BenchJob> jobs;
  for (Index ni : grid.num_locations) {
    for (double p : grid.densities) {
      for (const auto& [k1, k2] : grid.ks) {
        for (double d : grid.gamma_factors) {
          const std::string cell =
              fmt::format("n{}-m{}-p{:.2f}-k{}.{}-d{:.2f}", ni,
                          grid.num_regions, p, k1, k2, d);
          for (int rep = 0; rep < grid.replicates; ++rep) {
            // Graph seed ignores k and d so those cells share the graph.
            std::uint64_t seed = Mix(grid.seed, ni);
            seed = Mix(seed, grid.num_regions);
            seed = Mix(seed, Micro(p));
            seed = Mix(seed, rep);
            GenParams params;
            params.num_locations = ni;
            params.num_regions = grid.num_regions;
            params.density = p;
            params.k1 = k1;
            params.k2 = k2;
            params.gamma_factor = d;
            params.q = grid.q;
            params.seed = seed;
            ValidateGenParams(params);
            BenchJob job;
            job.id = fmt::format("n{}-m{}-p{:.2f}-r{}", ni, grid.num_regions,
                                 p, rep);
            job.cell = cell;
            job.k1 = k1;
            job.k2 = k2;
            job.d = d;
            job.make = [params] { return RandomInstance(params); };
            job.avg_seed = Mix(Mix(Mix(seed, k1), k2), Micro(d));
            jobs.push_back(std::move(job));
          }
        }
      }
    }
  }
  return jobs;
}

ResultRow RunJob(const BenchJob& job, const BenchSettings& settings) {
  ResultRow row;
  row.id = job.id;
  row.k1 = job.k1;
  row.k2 = job.k2;
  row.d = job.d;
  bool limited = false;
  try {
    const Instance inst = job.make();
    std::optional<Count> setf_obj, asf_obj;
    if (settings.run_setf) {
      const RobustRun run = SolveSetf(inst, settings.robust);
      row.time_setf_s = run.elapsed_s;
      row.solved_setf = run.status == RunStatus::kOptimal;
      if (row.solved_setf) setf_obj = run.objective();
      limited |= !row.solved_setf;
      spdlog::debug("{} setf {} in {:.2f}s after {} rounds", job.id,
                    RunStatusName(run.status), run.elapsed_s, run.iterations);
    }
    if (settings.run_asf) {
      const RobustRun run = SolveAsf(inst, settings.robust);
      row.time_asf_s = run.elapsed_s;
      row.solved_asf = run.status == RunStatus::kOptimal;
      if (row.solved_asf) asf_obj = run.objective();
      limited |= !row.solved_asf;
      spdlog::debug("{} asf {} in {:.2f}s after {} rounds", job.id,
                    RunStatusName(run.status), run.elapsed_s, run.iterations);
    }
    row.robust_obj = setf_obj ? setf_obj : asf_obj;
    try {
      row.worst_obj = WorstCaseValue(inst, settings.robust.limits);
      row.avg_obj = AverageCaseValue(inst, settings.avg_scenarios, job.avg_seed,
                                     settings.robust.limits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSolverLimit) throw;
      limited = true;
    }
    if (setf_obj && asf_obj && *setf_obj != *asf_obj) {
      row.status = "Mismatch";
    } else {
      row.status = limited ? "TimeLimit" : "Optimal";
    }
  } catch (const Error& e) {
    spdlog::error("{}: {}", job.id, e.what());
    row.status = std::string("Error:") + ErrorCodeName(e.code());
  }
  return row;
}

std::size_t RunBench(const std::vector<BenchJob>& jobs,
                     const BenchSettings& settings, std::ostream& rows,
                     std::ostream* summary, const std::atomic<bool>& stop) {
  std::vector<std::optional<ResultRow>> done(jobs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  int running = 0;

  auto worker = [&] {
    while (true) {
      std::size_t index;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (stop.load() || next >= jobs.size()) break;
        index = next++;
        ++running;
      }
      ResultRow row = RunJob(jobs[index], settings);
      {
        std::lock_guard<std::mutex> lock(mu);
        done[index] = std::move(row);
        --running;
      }
      cv.notify_all();
    }
    cv.notify_all();
  };

  const int threads = std::max(1, settings.threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::map<std::string, std::size_t> cell_index;
  std::vector<std::pair<std::string, CellStats>> cells;
  rows << kCsvHeader << '\n';
  rows.flush();
  std::size_t written = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (written < jobs.size()) {
      cv.wait_for(lock, std::chrono::milliseconds(200), [&] {
        return done[written].has_value() ||
               (stop.load() && running == 0) ||
               (next >= jobs.size() && running == 0 && !done[written]);
      });
      if (!done[written]) {
        if (stop.load() && running == 0) break;
        continue;
      }
      const ResultRow& row = *done[written];
      const BenchJob& job = jobs[written];
      rows << FormatRow(row) << '\n';
      rows.flush();
      auto [it, fresh] = cell_index.try_emplace(job.cell, cells.size());
      if (fresh) cells.push_back({job.cell, CellStats{job.k1, job.k2, job.d}});
      CellStats& c = cells[it->second].second;
      ++c.rows;
      if (row.solved_setf) {
        ++c.solved_setf;
        c.time_setf += row.time_setf_s;
      }
      if (row.solved_asf) {
        ++c.solved_asf;
        c.time_asf += row.time_asf_s;
      }
      if (row.robust_obj && row.avg_obj && row.worst_obj) {
        ++c.complete;
        c.avg += *row.avg_obj;
        c.robust += *row.robust_obj;
        c.worst += *row.worst_obj;
      }
      ++written;
    }
  }
  for (auto& t : pool) t.join();
  if (summary) WriteSummary(*summary, cells);
  return written;
}

}  // namespace rmc
