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

#include "divmax/greedy.hpp"

#include <string>

namespace divmax {

SolveReport greedy_solve(const Instance& inst) {
  if (inst.constraint.kind != ConstraintKind::kUniform) {
    throw SolverError(ErrorCode::kWrongConstraintKind,
                      "greedy requires a uniform constraint");
  }
  const int n = inst.size();
  const int p = inst.constraint.p;
  if (p > n) {
    throw SolverError(ErrorCode::kPTooLarge,
                      "p = " + std::to_string(p) + " exceeds n = " +
                          std::to_string(n));
  }
  if (p < 1) {
    throw SolverError(ErrorCode::kPreconditionViolated, "p must be at least 1");
  }

  ElementSet selected;
  std::vector<TraceStep> trace;
  trace.reserve(static_cast<std::size_t>(p));
  for (int step = 0; step < p; ++step) {
    int best = -1;
    double best_score = 0.0;
    for (int u = 0; u < n; ++u) {
      if (selected.contains(u)) continue;
      const double score = scaled_marginal(inst, u, selected);
      if (best < 0 || score > best_score) {  // ties keep the lowest index
        best = u;
        best_score = score;
      }
    }
    selected.insert(best);
    trace.push_back(TraceStep{best, -1, best_score});
  }

  SolveReport report = make_report(inst, "greedy", std::move(selected), p);
  report.trace = std::move(trace);
  return report;
}

}  // namespace divmax
