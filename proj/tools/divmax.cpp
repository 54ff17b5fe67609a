// Copyright 2026 The Authors.
//
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
//
// Command-line front end. Commands:
//   solve    --instance f.json --algorithm greedy|local|exact [--out r.json]
//   gen      --n N --beta B --objective modular|coverage
//            --constraint uniform|partition --lambda L --rank R --seed S
//            [--out f.json]
//   verify   --instance f.json [--trials T] [--seed S]   (JSON lines)
//   compare  --instance f.json [--algorithm greedy|local|all]   (JSON lines)
//   bench    --dir instances/ [--out report.csv]
// Exit codes: 0 success, 1 usage error, 2 invalid input or infeasible request
// (one-line diagnostic on stderr). DIVMAX_MAX_STATES overrides the default
// 10^6 cap on oracle search states.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divmax/greedy.hpp"
#include "divmax/io.hpp"
#include "divmax/localsearch.hpp"
#include "divmax/testkit.hpp"

namespace {

using namespace divmax;

std::int64_t max_states_from_env() {
  const char* raw = std::getenv("DIVMAX_MAX_STATES");
  if (raw == nullptr) return kDefaultMaxStates;
  char* end = nullptr;
  const long long parsed = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 1) {
    throw SolverError(ErrorCode::kParseError,
                      std::string("DIVMAX_MAX_STATES is not a positive "
                                  "integer: \"") +
                          raw + "\"");
  }
  return parsed;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "cannot write " + out_path);
  }
  out << text;
}

struct SolveConfig {
  std::string instance;
  std::string algorithm = "greedy";
  std::string out;
  std::string improve = "first";
  long max_iters = 0;
  std::uint64_t seed = 0;
  bool random_seed_basis = false;
};

LocalSearchOptions local_options(const SolveConfig& cfg) {
  LocalSearchOptions options;
  options.improve =
      cfg.improve == "best" ? ImproveRule::kBest : ImproveRule::kFirst;
  options.max_iters = cfg.max_iters;
  options.random_seed_basis = cfg.random_seed_basis;
  options.seed = cfg.seed;
  return options;
}

int cmd_solve(const SolveConfig& cfg) {
  const Instance inst = load_instance(cfg.instance);
  SolveReport report;
  if (cfg.algorithm == "greedy") {
    report = greedy_solve(inst);
  } else if (cfg.algorithm == "local") {
    report = local_search_solve(inst, local_options(cfg));
  } else {
    ElementSet best =
        (inst.constraint.kind == ConstraintKind::kUniform
             ? exact_uniform(inst, inst.constraint.p, max_states_from_env())
             : exact_matroid(inst, max_states_from_env()))
            .first;
    report = make_report(inst, "exact", std::move(best), 0);
  }
  emit(report_to_json(report, inst), cfg.out);
  return 0;
}

struct GenConfig {
  GenSpec spec;
  std::string objective = "modular";
  std::string constraint = "uniform";
  std::string out;
};

int cmd_gen(GenConfig& cfg) {
  cfg.spec.objective = cfg.objective == "coverage" ? ObjectiveKind::kCoverage
                                                   : ObjectiveKind::kModular;
  cfg.spec.constraint = cfg.constraint == "partition"
                            ? ConstraintKind::kPartition
                            : ConstraintKind::kUniform;
  const Instance inst = gen_instance(cfg.spec);
  emit(instance_to_json(inst), cfg.out);
  return 0;
}

struct VerifyConfig {
  std::string instance;
  std::string out;
  int trials = 100;
  std::uint64_t seed = 0;
};

// Random disjoint (x, y) with x nonempty (and y nonempty when n allows it):
// each element lands in x, in y, or in neither with equal probability;
// degenerate draws are retried.
std::pair<ElementSet, ElementSet> random_disjoint_pair(std::mt19937_64& rng,
                                                       int n) {
  while (true) {
    std::vector<int> x_members, y_members;
    for (int e = 0; e < n; ++e) {
      switch (rng() % 3) {
        case 0: x_members.push_back(e); break;
        case 1: y_members.push_back(e); break;
        default: break;
      }
    }
    if (!x_members.empty() && (!y_members.empty() || n < 2)) {
      return {ElementSet{std::move(x_members)}, ElementSet{std::move(y_members)}};
    }
  }
}

int cmd_verify(const VerifyConfig& cfg) {
  const Instance inst = load_instance(cfg.instance);
  std::ostringstream lines;

  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto [x, y] = random_disjoint_pair(rng, inst.size());
    lines << bound_check_to_json(check_cross_distance_bound(inst.metric, x, y));
  }

  // The swap bounds need a local optimum, the exhaustive optimum, and the
  // exchange pairing between their symmetric-difference halves.
  const SolveReport local = local_search_solve(inst);
  try {
    const auto [optimum, value] = exact_matroid(inst, max_states_from_env());
    const ElementSet b = set_difference(local.selected, optimum);
    const ElementSet c = set_difference(optimum, local.selected);
    const auto pairing = exchange_bijection(inst.constraint, b, c);
    lines << bound_check_to_json(
        check_swap_value_bound(inst, local.selected, optimum, pairing));
    lines << bound_check_to_json(
        check_matched_cross_bound(inst.metric, b, c, pairing));
    lines << bound_check_to_json(
        check_swap_distance_bound(inst, local.selected, optimum, pairing));
  } catch (const SolverError& e) {
    if (e.code() != ErrorCode::kSearchSpaceTooLarge &&
        e.code() != ErrorCode::kGroundSetTooLarge) {
      throw;
    }
    BoundCheck unavailable;
    unavailable.name = "swap-bounds";
    unavailable.skipped = true;
    unavailable.note = std::string("exact oracle unavailable: ") + e.what();
    lines << bound_check_to_json(unavailable);
  }

  emit(lines.str(), cfg.out);
  return 0;
}

struct CompareConfig {
  std::string instance;
  std::string algorithm = "all";
  std::string out;
};

int cmd_compare(const CompareConfig& cfg) {
  const Instance inst = load_instance(cfg.instance);
  const std::int64_t max_states = max_states_from_env();
  std::ostringstream lines;
  if (cfg.algorithm == "greedy" || cfg.algorithm == "all") {
    if (inst.constraint.kind == ConstraintKind::kUniform) {
      lines << ratio_report_to_json(compare_greedy(inst, max_states), "greedy",
                                    inst.metric.alpha);
    } else if (cfg.algorithm == "greedy") {
      throw SolverError(ErrorCode::kWrongConstraintKind,
                        "greedy needs a uniform constraint");
    }
  }
  if (cfg.algorithm == "local" || cfg.algorithm == "all") {
    lines << ratio_report_to_json(compare_local(inst, {}, max_states),
                                  "local_search", inst.metric.alpha);
  }
  emit(lines.str(), cfg.out);
  return 0;
}

struct BenchConfig {
  std::string dir;
  std::string out;
};

std::string csv_number(double value) {
  std::ostringstream s;
  s.precision(12);
  s << value;
  return s.str();
}

struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::string fields;  // n..wall_ms, already comma-joined
  std::string error;
};

int cmd_bench(const BenchConfig& cfg) {
  const std::int64_t max_states = max_states_from_env();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(cfg.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,algorithm,n,rank,alpha,phi,exact_phi,ratio,bound,"
         "satisfied,wall_ms,error\n";
  double min_ratio_greedy = 2.0, min_ratio_local = 2.0;

  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::optional<Instance> loaded;
    try {
      loaded.emplace(load_instance(path.string()));
    } catch (const SolverError& e) {
      csv << name << ",,,,,,,,,,," << to_string(e.code()) << "\n";
      continue;
    }
    const Instance& inst = *loaded;
    const std::string prefix = std::to_string(inst.size()) + "," +
                               std::to_string(rank(inst.constraint)) + "," +
                               csv_number(inst.metric.alpha);
    for (const std::string algorithm : {"greedy", "local"}) {
      csv << name << "," << algorithm << ",";
      try {
        const auto start = std::chrono::steady_clock::now();
        const RatioReport report =
            algorithm == "greedy" ? compare_greedy(inst, max_states)
                                  : compare_local(inst, {}, max_states);
        const auto stop = std::chrono::steady_clock::now();
        const double wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        csv << prefix << "," << csv_number(report.heuristic_value) << ","
            << csv_number(report.exact_value) << ","
            << csv_number(report.ratio) << "," << csv_number(report.bound)
            << "," << (report.satisfied ? "true" : "false") << ","
            << csv_number(wall_ms) << ",\n";
        double& min_ratio =
            algorithm == "greedy" ? min_ratio_greedy : min_ratio_local;
        min_ratio = std::min(min_ratio, report.ratio);
      } catch (const SolverError& e) {
        csv << prefix << ",,,,,,," << to_string(e.code()) << "\n";
      }
    }
  }
  if (min_ratio_greedy <= 1.0) {
    csv << "summary,greedy,,,,,," << csv_number(min_ratio_greedy)
        << ",,,,\n";
  }
  if (min_ratio_local <= 1.0) {
    csv << "summary,local,,,,,," << csv_number(min_ratio_local) << ",,,,\n";
  }

  emit(csv.str(), cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-sum diversification solver"};
  app.require_subcommand(1);

  SolveConfig solve_cfg;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", solve_cfg.instance, "instance JSON file")
      ->required();
  solve->add_option("--algorithm", solve_cfg.algorithm, "solver to run")
      ->check(CLI::IsMember({"greedy", "local", "exact"}));
  solve->add_option("--out", solve_cfg.out, "report file (default stdout)");
  solve->add_option("--improve", solve_cfg.improve, "local swap rule")
      ->check(CLI::IsMember({"first", "best"}));
  solve->add_option("--max-iters", solve_cfg.max_iters,
                    "local swap cap (0 = 10*n*rank)");
  solve->add_flag("--random-seed-basis", solve_cfg.random_seed_basis,
                  "seed local search from a random basis");
  solve->add_option("--seed", solve_cfg.seed, "random-basis seed");

  GenConfig gen_cfg;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_cfg.spec.n, "ground-set size")->required();
  gen->add_option("--beta", gen_cfg.spec.beta,
                  "distance power (alpha <= 2^(beta-1))");
  gen->add_option("--objective", gen_cfg.objective, "objective kind")
      ->check(CLI::IsMember({"modular", "coverage"}));
  gen->add_option("--constraint", gen_cfg.constraint, "constraint kind")
      ->check(CLI::IsMember({"uniform", "partition"}));
  gen->add_option("--lambda", gen_cfg.spec.lambda, "distance weight");
  gen->add_option("--rank,--p", gen_cfg.spec.target_rank,
                  "uniform p / total partition capacity");
  gen->add_option("--seed", gen_cfg.spec.seed, "generator seed");
  gen->add_option("--out", gen_cfg.out, "instance file (default stdout)");

  VerifyConfig verify_cfg;
  CLI::App* verify =
      app.add_subcommand("verify", "run the inequality checks (JSON lines)");
  verify->add_option("--instance", verify_cfg.instance, "instance JSON file")
      ->required();
  verify->add_option("--trials", verify_cfg.trials,
                     "random cross-distance trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_cfg.seed, "trial seed");
  verify->add_option("--out", verify_cfg.out, "output file (default stdout)");

  CompareConfig compare_cfg;
  CLI::App* compare = app.add_subcommand(
      "compare", "measure solvers against the exact oracle (JSON lines)");
  compare->add_option("--instance", compare_cfg.instance, "instance JSON file")
      ->required();
  compare->add_option("--algorithm", compare_cfg.algorithm, "which solvers")
      ->check(CLI::IsMember({"greedy", "local", "all"}));
  compare->add_option("--out", compare_cfg.out, "output file (default stdout)");

  BenchConfig bench_cfg;
  CLI::App* bench =
      app.add_subcommand("bench", "batch-compare a directory of instances");
  bench->add_option("--dir", bench_cfg.dir, "directory of instance files")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--out", bench_cfg.out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(solve_cfg);
    if (gen->parsed()) return cmd_gen(gen_cfg);
    if (verify->parsed()) return cmd_verify(verify_cfg);
    if (compare->parsed()) return cmd_compare(compare_cfg);
    if (bench->parsed()) return cmd_bench(bench_cfg);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
