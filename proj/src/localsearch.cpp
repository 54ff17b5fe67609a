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

#include "divmax/localsearch.hpp"

#include <random>
#include <string>
#include <utility>

namespace divmax {

namespace {

// Best feasible singleton, lowest index on ties. Rank-1 matroids have no
// pair to seed with and no swap partner to improve against.
SolveReport solve_rank_one(const Instance& inst) {
  const int n = inst.size();
  int best = -1;
  double best_value = 0.0;
  for (int e = 0; e < n; ++e) {
    const ElementSet candidate{e};
    if (!is_independent(inst.constraint, candidate)) continue;
    const double value = objective_value(inst, candidate);
    if (best < 0 || value > best_value) {
      best = e;
      best_value = value;
    }
  }
  SolveReport report = make_report(inst, "local_search", ElementSet{best}, 0);
  report.trace.push_back(TraceStep{-1, -1, report.objective_value});
  return report;
}

ElementSet random_basis(const Instance& inst, std::uint64_t seed) {
  const int n = inst.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  const int target = rank(inst.constraint);
  ElementSet basis;
  for (int e : order) {
    if (basis.size() == target) break;
    if (is_independent(inst.constraint, basis.with(e))) basis.insert(e);
  }
  return basis;
}

struct Swap {
  int in = -1;
  int out = -1;
  double value = 0.0;
};

// The swap to apply next, or in < 0 at a local optimum. kFirst returns the
// first improving swap in ascending (u, v) order; kBest the largest
// improvement, earliest (u, v) on ties.
Swap find_swap(const Instance& inst, const ElementSet& current,
               double current_value, const LocalSearchOptions& options) {
  const int n = inst.size();
  Swap chosen;
  for (int u = 0; u < n; ++u) {
    if (current.contains(u)) continue;
    for (int v : current) {
      const ElementSet candidate = current.without(v).with(u);
      if (!is_independent(inst.constraint, candidate)) continue;
      const double value = objective_value(inst, candidate);
      if (value <= current_value + options.eps_improve) continue;
      if (options.improve == ImproveRule::kFirst) return Swap{u, v, value};
      if (chosen.in < 0 || value > chosen.value) chosen = Swap{u, v, value};
    }
  }
  return chosen;
}

}  // namespace

std::pair<int, int> best_seed_pair(const Instance& inst) {
  if (rank(inst.constraint) < 2) {
    throw SolverError(ErrorCode::kRankTooSmall,
                      "seed pair needs a matroid of rank >= 2");
  }
  const int n = inst.size();
  int best_x = -1, best_y = -1;
  double best_value = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const ElementSet pair{x, y};
      if (!is_independent(inst.constraint, pair)) continue;
      const double value =
          inst.objective.value(pair) + inst.lambda * inst.metric.dist(x, y);
      if (best_x < 0 || value > best_value) {  // lexicographic tie-break
        best_x = x;
        best_y = y;
        best_value = value;
      }
    }
  }
  if (best_x < 0) {
    // Unreachable for a valid matroid of rank >= 2: two elements of any
    // basis form an independent pair.
    throw SolverError(ErrorCode::kRankTooSmall, "no independent pair exists");
  }
  return {best_x, best_y};
}

SolveReport local_search_solve(const Instance& inst,
                               const LocalSearchOptions& options) {
  const int n = inst.size();
  const int target = rank(inst.constraint);
  if (target == 1) return solve_rank_one(inst);

  ElementSet current;
  if (options.random_seed_basis) {
    current = random_basis(inst, options.seed);
  } else {
    const auto [x, y] = best_seed_pair(inst);
    current = extend_to_basis(inst.constraint, ElementSet{x, y}, n);
  }
  double current_value = objective_value(inst, current);

  std::vector<TraceStep> trace;
  trace.push_back(TraceStep{-1, -1, current_value});

  const long max_iters =
      options.max_iters > 0 ? options.max_iters : 10L * n * target;
  long iterations = 0;
  bool truncated = false;

  while (true) {
    const Swap swap = find_swap(inst, current, current_value, options);
    if (swap.in < 0) break;  // local optimum
    if (iterations >= max_iters) {
      truncated = true;  // an improving swap still existed
      break;
    }

    current.erase(swap.out);
    current.insert(swap.in);
    current_value = objective_value(inst, current);
    ++iterations;
    trace.push_back(TraceStep{swap.in, swap.out, current_value});
  }

  SolveReport report = make_report(inst, "local_search", std::move(current),
                                   static_cast<int>(iterations));
  report.truncated = truncated;
  report.trace = std::move(trace);
  return report;
}

}  // namespace divmax
