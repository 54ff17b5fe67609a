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

#include "divmax/instance.hpp"

#include <string>
#include <utility>

namespace divmax {

Instance make_instance(SemiMetric metric, SubmodularObjective objective,
                       double lambda, ConstraintSpec constraint,
                       std::vector<std::string> labels) {
  const int n = metric.size();
  if (objective.size() != n) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "objective covers " + std::to_string(objective.size()) +
                          " elements but the metric has " + std::to_string(n));
  }
  if (!(lambda >= 0.0)) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "lambda must be nonnegative");
  }
  validate_constraint(constraint, n);
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      std::to_string(labels.size()) + " labels for " +
                          std::to_string(n) + " elements");
  }
  return Instance{std::move(labels), std::move(metric), std::move(objective),
                  lambda, std::move(constraint)};
}

double objective_value(const Instance& inst, const ElementSet& s) {
  return inst.objective.value(s) + inst.lambda * pairwise_sum(inst.metric, s);
}

double scaled_marginal(const Instance& inst, int u, const ElementSet& s) {
  return 0.5 * inst.objective.marginal(u, s) +
         inst.lambda * marginal_distance(inst.metric, u, s);
}

SolveReport make_report(const Instance& inst, std::string algorithm,
                        ElementSet selected, int iterations) {
  SolveReport report;
  report.algorithm = std::move(algorithm);
  report.f_value = inst.objective.value(selected);
  report.distance_sum = pairwise_sum(inst.metric, selected);
  report.objective_value = report.f_value + inst.lambda * report.distance_sum;
  report.selected = std::move(selected);
  report.iterations = iterations;
  report.alpha = inst.metric.alpha;
  return report;
}

}  // namespace divmax
