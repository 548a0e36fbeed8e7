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

// Command-line front end: solve, check, separate, generate, bench.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "rmc/bench.hpp"
#include "rmc/core.hpp"
#include "rmc/instgen.hpp"
#include "rmc/io.hpp"
#include "rmc/robust.hpp"
#include "rmc/separation.hpp"

namespace {

using namespace rmc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeLimit = 2;
constexpr int kExitInfeasible = 3;

std::atomic<bool> g_stop{false};

extern "C" void OnInterrupt(int) {
  g_stop.store(true);
  // A second interrupt terminates immediately.
  std::signal(SIGINT, SIG_DFL);
}

void SetupLogging() {
  auto logger = spdlog::stderr_color_mt("rmc");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%H:%M:%S.%e] [%l] %v");
  const char* env = std::getenv("RMC_LOG");
  const std::string level = env ? env : "off";
  if (level == "off" || level.empty()) {
    spdlog::set_level(spdlog::level::off);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::set_level(spdlog::level::warn);
    spdlog::warn("ignoring RMC_LOG={}, expected off, info or debug", level);
    spdlog::set_level(spdlog::level::off);
  }
}

std::string Join(const std::vector<Count>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::string Join(const IndexSet& v) {
  return Join(std::vector<Count>(v.begin(), v.end()));
}

Instance LoadNormalized(const std::string& path) {
  const Instance raw = ReadInstanceFile(path);
  Instance inst = ValidateAndNormalize(raw);
  if (!(inst == raw)) spdlog::info("tightened upper bounds of {}", path);
  return inst;
}

std::vector<Count> LoadX(const Instance& inst, const std::string& text) {
  std::vector<Count> x = ParseCountList(text);
  if (static_cast<Index>(x.size()) != inst.num_locations()) {
    throw Error(ErrorCode::kParseError,
                fmt::format("x has {} entries, the instance has {} locations",
                            x.size(), inst.num_locations()));
  }
  for (Count v : x) {
    if (v < 0) throw Error(ErrorCode::kParseError, "x must be non-negative");
  }
  return x;
}

SeparationRoute ParseRoute(const std::string& name) {
  if (name == "set") return SeparationRoute::kSet;
  if (name == "bigm") return SeparationRoute::kBigM;
  return SeparationRoute::kBrute;
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kUncoverableRegion:
    case ErrorCode::kBoundViolation:
      return kExitInfeasible;
    case ErrorCode::kSolverLimit:
      return kExitTimeLimit;
    default:
      return kExitUsage;
  }
}

struct SolveArgs {
  std::string path;
  std::string formulation = "setf";
  std::string route = "set";
  double time_limit = kInfinity;
  int multi_cut = 1;
};

int CmdSolve(const SolveArgs& a) {
  const Instance inst = LoadNormalized(a.path);
  RobustOptions o;
  o.limits.time_limit_s = a.time_limit;
  o.route = ParseRoute(a.route);
  o.multi_cut = a.multi_cut;
  const Formulation f =
      a.formulation == "asf" ? Formulation::kAsf : Formulation::kSetf;
  const RobustRun run = SolveRobust(inst, f, o);
  std::cout << "formulation " << FormulationName(f) << '\n'
            << "status " << RunStatusName(run.status) << '\n'
            << "objective " << run.objective() << '\n'
            << "x " << Join(run.solution.x) << '\n'
            << "cuts "
            << (f == Formulation::kSetf ? run.subsets.size() : run.scenarios.size())
            << '\n'
            << "iterations " << run.iterations << '\n'
            << "bounds " << run.lower_bound << ' ' << run.trivial.upper << '\n'
            << fmt::format("time_s {:.2f}\n", run.elapsed_s);
  return run.status == RunStatus::kOptimal ? kExitOk : kExitTimeLimit;
}

int CmdCheck(const std::string& path, const std::string& x_text,
             const std::string& route) {
  const Instance inst = LoadNormalized(path);
  const std::vector<Count> x = LoadX(inst, x_text);
  std::optional<Violation> v;
  if (route == "brute") {
    v = SeparateBrute(inst, x);
  } else if (route == "bigm") {
    v = SeparateBigM(inst, x);
  } else {
    v = SeparateSet(inst, x);
  }
  if (!v) {
    std::cout << "FEASIBLE\n";
    return kExitOk;
  }
  const Scenario xi = v->witness ? *v->witness : ScenarioFromSubset(inst, v->subset);
  std::cout << "VIOLATED\n"
            << "subset " << Join(v->subset) << '\n'
            << "amount " << v->amount << '\n'
            << "scenario " << Join(xi.demand) << '\n';
  return kExitOk;
}

int CmdSeparate(const std::string& path, const std::string& x_text,
                const std::string& route) {
  const Instance inst = LoadNormalized(path);
  const std::vector<Count> x = LoadX(inst, x_text);
  std::optional<Violation> v;
  if (route == "brute") {
    v = SeparateBrute(inst, x);
  } else if (route == "bigm") {
    v = SeparateBigM(inst, x);
  } else {
    v = SeparateSet(inst, x);
  }
  std::cout << "route " << route << '\n';
  if (!v) {
    std::cout << "violation none\n";
    return kExitOk;
  }
  std::cout << "violation " << v->amount << '\n'
            << "subset " << Join(v->subset) << '\n';
  if (v->witness) std::cout << "scenario " << Join(v->witness->demand) << '\n';
  return kExitOk;
}

std::pair<Count, Count> ParseK(const std::string& text) {
  const std::vector<Count> k = ParseCountList(text);
  if (k.size() != 2) throw Error(ErrorCode::kParseError, "k must be 'k1,k2'");
  return {k[0], k[1]};
}

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v;
    if (!(is >> v) || is.peek() != EOF) {
      throw Error(ErrorCode::kParseError, "bad number list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, "empty number list");
  return out;
}

struct GenerateArgs {
  Index ni = 10;
  Index nj = 30;
  double p = 0.2;
  std::string k = "2,2";
  double d = 0.5;
  Count q = 3;
  std::uint64_t seed = 1;
  std::string out;
};

int CmdGenerate(const GenerateArgs& a) {
  GenParams p;
  p.num_locations = a.ni;
  p.num_regions = a.nj;
  p.density = a.p;
  std::tie(p.k1, p.k2) = ParseK(a.k);
  p.gamma_factor = a.d;
  p.q = a.q;
  p.seed = a.seed;
  const std::string text = InstanceToString(RandomInstance(p));
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f || !(f << text)) throw Error(ErrorCode::kParseError, "cannot write " + a.out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string ni = "10";
  Index nj = 30;
  std::string p = "0.2";
  std::vector<std::string> k{"2,2"};
  std::string d = "0.5";
  int reps = 1;
  Count q = 3;
  std::uint64_t seed = 1;
  std::optional<double> time_limit;
  std::optional<int> avg;
  int threads = 1;
  int multi_cut = 1;
  std::string formulation = "both";
  std::string out;
  std::string summary;
  std::string geo;
  double threshold = 10.0;
  std::string gamma = "1";
};

std::vector<BenchJob> GeoJobs(const BenchArgs& a) {
  const WeightedGraph g = ReadWeightedGraphFile(a.geo);
  std::vector<BenchJob> jobs;
  for (Count gamma : ParseCountList(a.gamma)) {
    const GeoInstance geo = BuildGeoInstance(g, a.threshold, a.q, gamma);
    if (!geo.unreached_nodes.empty()) {
      spdlog::warn("{} nodes are out of reach of every facility",
                   geo.unreached_nodes.size());
    }
    BenchJob job;
    job.id = fmt::format("geo-t{:g}-g{}", a.threshold, gamma);
    job.cell = job.id;
    job.k1 = 0;
    job.k2 = 1;
    const Count total = geo.instance.sum_upper();
    job.d = total > 0 ? static_cast<double>(gamma) / total : 0.0;
    job.make = [inst = geo.instance] { return inst; };
    job.avg_seed = SplitMix64(a.seed ^ static_cast<std::uint64_t>(gamma));
    jobs.push_back(std::move(job));
  }
  return jobs;
}

int CmdBench(const BenchArgs& a) {
  const bool geo = !a.geo.empty();
  std::vector<BenchJob> jobs;
  if (geo) {
    jobs = GeoJobs(a);
  } else {
    BenchGrid grid;
    grid.num_locations.clear();
    for (Count n : ParseCountList(a.ni)) grid.num_locations.push_back(static_cast<Index>(n));
    grid.num_regions = a.nj;
    grid.densities = ParseDoubleList(a.p);
    grid.ks.clear();
    for (const auto& k : a.k) grid.ks.push_back(ParseK(k));
    grid.gamma_factors = ParseDoubleList(a.d);
    grid.replicates = a.reps;
    grid.q = a.q;
    grid.seed = a.seed;
    jobs = GridJobs(grid);
  }

  BenchSettings s;
  s.robust.limits.time_limit_s = a.time_limit.value_or(geo ? 900.0 : 120.0);
  s.robust.multi_cut = a.multi_cut;
  s.avg_scenarios = a.avg.value_or(geo ? 5 : 10);
  s.threads = a.threads;
  s.run_setf = a.formulation != "asf";
  s.run_asf = a.formulation != "setf";

  std::ofstream file;
  std::ostream* rows = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write " + a.out);
    rows = &file;
  }
  std::ofstream summary_file;
  std::string summary_path = a.summary;
  if (summary_path.empty() && rows == &file) summary_path = a.out + ".summary.csv";
  if (!summary_path.empty()) {
    summary_file.open(summary_path, std::ios::binary);
    if (!summary_file) throw Error(ErrorCode::kParseError, "cannot write " + summary_path);
  }

  std::signal(SIGINT, OnInterrupt);
  spdlog::info("running {} jobs on {} thread(s)", jobs.size(), s.threads);
  const std::size_t written =
      RunBench(jobs, s, *rows, summary_path.empty() ? nullptr : &summary_file, g_stop);
  std::signal(SIGINT, SIG_DFL);
  if (written < jobs.size()) {
    spdlog::warn("interrupted after {} of {} rows", written, jobs.size());
    return kExitTimeLimit;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  SetupLogging();
  CLI::App app{"Robust min-q multiset multicover solver"};
  app.require_subcommand(1);
  const auto positive = CLI::PositiveNumber;
  const auto non_negative = CLI::NonNegativeNumber;

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve the robust problem for an instance file");
  s->add_option("instance", solve.path, "Instance file")->required()->check(CLI::ExistingFile);
  s->add_option("--formulation", solve.formulation, "setf or asf")
      ->check(CLI::IsMember({"setf", "asf"}));
  s->add_option("--route", solve.route, "Separation: set, bigm or brute")
      ->check(CLI::IsMember({"set", "bigm", "brute"}));
  s->add_option("--time-limit", solve.time_limit, "Seconds")->check(non_negative);
  s->add_option("--multi-cut", solve.multi_cut, "Cuts per round")->check(positive);

  std::string check_path, check_x, check_route = "set";
  auto* c = app.add_subcommand("check", "Check robust feasibility of a supplier vector");
  c->add_option("instance", check_path, "Instance file")->required()->check(CLI::ExistingFile);
  c->add_option("--x", check_x, "Supplier counts, e.g. 1,0")->required();
  c->add_option("--route", check_route, "Separation: set, bigm or brute")
      ->check(CLI::IsMember({"set", "bigm", "brute"}));

  std::string sep_path, sep_x, sep_route = "set";
  auto* sp = app.add_subcommand("separate", "Run one separation round");
  sp->add_option("instance", sep_path, "Instance file")->required()->check(CLI::ExistingFile);
  sp->add_option("--x", sep_x, "Supplier counts, e.g. 1,0")->required();
  sp->add_option("--route", sep_route, "set, bigm or brute")
      ->check(CLI::IsMember({"set", "bigm", "brute"}));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a random instance");
  g->add_option("--nI", gen.ni, "Locations")->check(positive);
  g->add_option("--nJ", gen.nj, "Regions")->check(positive);
  g->add_option("--p", gen.p, "Edge density");
  g->add_option("--k", gen.k, "k1,k2");
  g->add_option("--d", gen.d, "Gamma factor in [0, 1]");
  g->add_option("--q", gen.q, "Supplier capacity")->check(positive);
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run the benchmark grid and write CSV");
  b->add_option("--nI", bench.ni, "Location counts, comma separated");
  b->add_option("--nJ", bench.nj, "Regions")->check(positive);
  b->add_option("--p", bench.p, "Densities, comma separated");
  b->add_option("--k", bench.k, "k1,k2 (repeatable)");
  b->add_option("--d", bench.d, "Gamma factors, comma separated");
  b->add_option("--reps", bench.reps, "Instances per cell")->check(positive);
  b->add_option("--q", bench.q, "Supplier capacity")->check(positive);
  b->add_option("--seed", bench.seed, "Base seed");
  b->add_option("--time-limit", bench.time_limit, "Seconds per driver run")->check(non_negative);
  b->add_option("--avg-scenarios", bench.avg, "Scenarios for the average case")->check(positive);
  b->add_option("--threads", bench.threads, "Worker threads")->check(positive);
  b->add_option("--multi-cut", bench.multi_cut, "Cuts per round")->check(positive);
  b->add_option("--formulation", bench.formulation, "setf, asf or both")
      ->check(CLI::IsMember({"setf", "asf", "both"}));
  b->add_option("--out", bench.out, "CSV file (default stdout)");
  b->add_option("--summary", bench.summary, "Per-cell summary CSV");
  b->add_option("--geo", bench.geo, "Weighted graph file; replaces the grid")
      ->check(CLI::ExistingFile);
  b->add_option("--threshold", bench.threshold, "Travel time limit for --geo")->check(non_negative);
  b->add_option("--gamma", bench.gamma, "Gamma values for --geo, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s) return CmdSolve(solve);
    if (*c) return CmdCheck(check_path, check_x, check_route);
    if (*sp) return CmdSeparate(sep_path, sep_x, sep_route);
    if (*g) return CmdGenerate(gen);
    if (*b) return CmdBench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitFor(e);
  }
  return kExitUsage;
}
