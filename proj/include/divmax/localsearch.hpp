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
#include <utility>

#include "divmax/instance.hpp"

namespace divmax {

enum class ImproveRule {
  kFirst,  // apply the first improving swap in ascending (u, v) scan order
  kBest,   // scan all feasible swaps, apply the largest improvement
};

struct LocalSearchOptions {
  ImproveRule improve = ImproveRule::kFirst;

  // 0 means the default cap of 10 * n * rank accepted swaps. Hitting the cap
  // flags the report as truncated instead of failing.
  long max_iters = 0;

  // A swap is accepted only if it improves φ by more than this. The strict
  // ">" of the idealized algorithm has no floating-point termination
  // guarantee; the tolerance weakens the proven bound by at most rank²·ε.
  double eps_improve = kTolerance;

  // Ablation: start from a random basis instead of the best independent
  // pair. The rank-2 optimality of the default seeding does not survive
  // random seeding.
  bool random_seed_basis = false;
  std::uint64_t seed = 0;
};

/// The independent pair {x, y} maximizing f({x,y}) + λ·d(x,y), ties broken
/// lexicographically. Requires rank >= 2 (kRankTooSmall otherwise).
std::pair<int, int> best_seed_pair(const Instance& inst);

/// Swap-based local search under any supported matroid constraint.
///
/// Starts from a basis containing the best seed pair, then repeatedly applies
/// swaps S + u - v that keep S a basis and raise φ by more than eps_improve,
/// until none exists. With rank 1 the best feasible singleton is returned
/// directly. At a non-truncated return, no feasible swap improves φ by more
/// than eps_improve; combined with the exchange structure of the matroid this
/// gives φ(S) >= φ(opt) / (2α²). The trace records φ after seeding and after
/// every accepted swap, so it is strictly increasing.
SolveReport local_search_solve(const Instance& inst,
                               const LocalSearchOptions& options = {});

}  // namespace divmax
