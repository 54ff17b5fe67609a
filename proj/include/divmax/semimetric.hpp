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

#include <Eigen/Core>

#include "divmax/types.hpp"

namespace divmax {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A validated pairwise distance table with a relaxed triangle inequality:
/// dist(u,v) <= alpha * (dist(u,w) + dist(w,v)) for all distinct u, v, w.
/// alpha is the smallest such factor, clamped below at 1; alpha == 1 is an
/// ordinary metric. Zero distance between distinct elements is allowed.
struct SemiMetric {
  Matrix dist;         // symmetric, nonnegative, zero diagonal
  double alpha = 1.0;  // minimal relaxation factor, >= 1

  int size() const { return static_cast<int>(dist.rows()); }
};

/// Checks squareness, nonnegativity, zero diagonal and symmetry (all within
/// `tolerance`), then computes the minimal relaxation factor
///   alpha = max(1, max over distinct triples of dist(u,v) / (dist(u,w) + dist(w,v))).
/// Ratios with zero numerator and zero denominator are skipped; a positive
/// numerator over a zero denominator means no finite alpha exists
/// (kUnboundedAlpha).
SemiMetric validate_semimetric(const Matrix& dist, double tolerance = kTolerance);

/// Sum of distances over unordered pairs within s.
double pairwise_sum(const SemiMetric& m, const ElementSet& s);

/// Sum of distances over s x t for disjoint s, t. Equals
/// pairwise_sum(s ∪ t) - pairwise_sum(s) - pairwise_sum(t).
double cross_sum(const SemiMetric& m, const ElementSet& s, const ElementSet& t);

/// Sum of distances from u to every member of s; u must not be in s.
double marginal_distance(const SemiMetric& m, int u, const ElementSet& s);

}  // namespace divmax
