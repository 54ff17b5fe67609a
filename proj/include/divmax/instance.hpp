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

#pragma once

#include <string>
#include <vector>

#include "divmax/matroid.hpp"
#include "divmax/objective.hpp"
#include "divmax/semimetric.hpp"
#include "divmax/types.hpp"

namespace divmax {

/// One max-sum diversification problem: maximize
///   φ(S) = f(S) + λ · Σ_{{u,v} ⊆ S} dist(u,v)
/// over the feasible sets of `constraint`. Immutable after construction;
/// safe to share across threads.
struct Instance {
  std::vector<std::string> labels;
  SemiMetric metric;
  SubmodularObjective objective;
  double lambda = 0.0;
  ConstraintSpec constraint;

  int size() const { return metric.size(); }
};

/// Validates cross-field invariants (lambda >= 0, matching element counts,
/// constraint valid for n) and fills in default labels when none are given.
Instance make_instance(SemiMetric metric, SubmodularObjective objective,
                       double lambda, ConstraintSpec constraint,
                       std::vector<std::string> labels = {});

/// φ(s) = f(s) + λ · pairwise_sum(s).
double objective_value(const Instance& inst, const ElementSet& s);

/// The greedy selection score φ′_u(s) = ½·f_u(s) + λ·d_u(s).
/// The half weight on the submodular marginal is what the 1/(2α) guarantee
/// is proved for; the reported objective stays unscaled.
double scaled_marginal(const Instance& inst, int u, const ElementSet& s);

/// One step of a solver run. Greedy records the chosen element and its
/// selection score; local search records the applied swap and the objective
/// value after it (the first entry is the initial basis, added = removed = -1).
struct TraceStep {
  int added = -1;
  int removed = -1;
  double value = 0.0;
};

struct SolveReport {
  std::string algorithm;
  ElementSet selected;
  double f_value = 0.0;
  double distance_sum = 0.0;
  double objective_value = 0.0;  // f_value + lambda * distance_sum
  int iterations = 0;
  double alpha = 1.0;     // copied from the instance's metric
  bool truncated = false; // local search stopped on the iteration cap
  std::vector<TraceStep> trace;
};

/// Fills selected/f/distance/objective/alpha for a finished solution.
SolveReport make_report(const Instance& inst, std::string algorithm,
                        ElementSet selected, int iterations);

}  // namespace divmax
