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

#include "divmax/instance.hpp"

namespace divmax {

/// Greedy max-sum diversification under a uniform (cardinality-p) constraint.
///
/// Runs exactly p iterations from S = ∅, each adding the element with the
/// largest scaled marginal φ′_u(S) = ½·f_u(S) + λ·d_u(S); ties go to the
/// lowest element index. Selecting by φ′ rather than the plain marginal is
/// what yields the 1/(2α) approximation guarantee against the exact optimum.
/// The report's trace lists each chosen element with its selection score.
SolveReport greedy_solve(const Instance& inst);

}  // namespace divmax
