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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divmax/instance.hpp"
#include "divmax/localsearch.hpp"

namespace divmax {

// Default cap on the number of states the exhaustive oracles may visit
// (subsets for the uniform oracle, bases for the matroid oracle). The CLI
// lets DIVMAX_MAX_STATES override it.
inline constexpr std::int64_t kDefaultMaxStates = 1'000'000;

/// Heuristic value measured against the exhaustive optimum.
/// `bound` is the guarantee the ratio is gated on: 1/(2α) for greedy,
/// 1/(2α²) for local search.
struct RatioReport {
  double exact_value = 0.0;
  double heuristic_value = 0.0;
  double ratio = 1.0;  // heuristic / exact, defined as 1 when exact <= 0
  double bound = 0.5;
  bool satisfied = false;  // ratio >= bound - kTolerance
};

/// Outcome of one inequality check. `margin` = lhs - rhs; the inequality
/// holds when margin >= -kTolerance. Checks whose hypotheses are not met
/// (degenerate sets, too few swapped elements) come back skipped rather
/// than failed, with the reason in `note`.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = true;
  bool skipped = false;
  std::string note;  // witness sets, or why the check was skipped
};

/// Exhaustive optimum over all size-p subsets, lexicographically smallest
/// argmax first. Guards C(n, p) <= max_states (kSearchSpaceTooLarge).
std::pair<ElementSet, double> exact_uniform(
    const Instance& inst, int p, std::int64_t max_states = kDefaultMaxStates);

/// Exhaustive optimum over all bases of the instance's constraint,
/// lexicographically smallest argmax first. Guards the basis count against
/// max_states via enumerate_bases.
std::pair<ElementSet, double> exact_matroid(
    const Instance& inst, std::int64_t max_states = kDefaultMaxStates);

/// Cross-distance bound for disjoint sets:
///   α·(|X|-1)·d(X,Y) >= |Y|·d(X).
BoundCheck check_cross_distance_bound(const SemiMetric& m, const ElementSet& x,
                                      const ElementSet& y);

/// Swap-sum bound on the submodular term, for bases s and o with
/// b_i enumerating s∖o and c_i = g(b_i) over o∖s:
///   Σ_i f(s - b_i + c_i) >= (t-2)·f(s) + f(o).
/// Skipped when t < 2.
BoundCheck check_swap_value_bound(const Instance& inst, const ElementSet& s,
                                  const ElementSet& o,
                                  const std::vector<std::pair<int, int>>& g);

/// Matched-pair cross bound for disjoint equal-size sets with pairing
/// (b_i, c_i):
///   α·(d(B,C) - Σ_i d(b_i, c_i)) >= d(C).
/// Skipped when t <= 2: with two or fewer pairs the inequality is not
/// implied by the relaxed triangle inequality.
BoundCheck check_matched_cross_bound(
    const SemiMetric& m, const ElementSet& b, const ElementSet& c,
    const std::vector<std::pair<int, int>>& pairs);

/// Swap-sum bound on the distance term, same setup as the value bound:
///   Σ_i d(s - b_i + c_i) >= (t-2)·d(s) + d(o)/α².
/// The 1/α² weight is the one the 2α² end-to-end guarantee consumes; with
/// α = 1 it collapses to the classical metric form. Skipped when t < 2, and
/// when t == 2 with rank <= 2 (the two-swap argument needs a shared element).
BoundCheck check_swap_distance_bound(const Instance& inst, const ElementSet& s,
                                     const ElementSet& o,
                                     const std::vector<std::pair<int, int>>& g);

/// n points sampled uniformly in the unit square, Euclidean distances raised
/// to the power beta >= 1. The result obeys the relaxed triangle inequality
/// with α <= 2^(beta-1); the stored alpha is the exact minimal factor
/// recomputed by validate_semimetric. Deterministic in seed.
SemiMetric gen_semimetric(int n, double beta, std::uint64_t seed);

struct GenSpec {
  int n = 8;
  double beta = 1.0;
  ObjectiveKind objective = ObjectiveKind::kModular;
  ConstraintKind constraint = ConstraintKind::kUniform;
  double lambda = 1.0;
  int target_rank = 3;  // uniform p, or total partition capacity
  std::uint64_t seed = 0;
};

/// Deterministic random instance: generated semi-metric, random nonnegative
/// weights or random coverage lists, requested constraint. Identical specs
/// produce identical instances.
Instance gen_instance(const GenSpec& spec);

/// Greedy against the uniform exhaustive oracle; bound 1/(2α).
RatioReport compare_greedy(const Instance& inst,
                           std::int64_t max_states = kDefaultMaxStates);

/// Local search against the matroid exhaustive oracle; bound 1/(2α²).
RatioReport compare_local(const Instance& inst,
                          const LocalSearchOptions& options = {},
                          std::int64_t max_states = kDefaultMaxStates);

}  // namespace divmax
