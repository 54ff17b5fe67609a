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

#include "divmax/semimetric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divmax {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SemiMetric validate_semimetric(const Matrix& dist, double tolerance) {
  const auto rows = dist.rows();
  const auto cols = dist.cols();
  if (rows != cols || rows < 1) {
    throw SolverError(ErrorCode::kNotSquare,
                      "matrix is " + std::to_string(rows) + "x" +
                          std::to_string(cols) + ", expected square with n >= 1");
  }
  const int n = static_cast<int>(rows);

  for (int i = 0; i < n; ++i) {
    if (std::abs(dist(i, i)) > tolerance) {
      throw SolverError(ErrorCode::kNonZeroDiagonal,
                        "nonzero diagonal at " + at(i, i));
    }
    for (int j = 0; j < n; ++j) {
      if (!(dist(i, j) >= -tolerance)) {  // also rejects NaN
        throw SolverError(ErrorCode::kNegativeEntry,
                          "negative entry at " + at(i, j));
      }
      if (j > i && std::abs(dist(i, j) - dist(j, i)) > tolerance) {
        throw SolverError(ErrorCode::kAsymmetric, "asymmetric at " + at(i, j));
      }
    }
  }

  // Minimal relaxation factor over all ordered distinct triples.
  double alpha = 1.0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const double duv = dist(u, v);
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const double detour = dist(u, w) + dist(w, v);
        if (detour == 0.0) {
          if (duv > 0.0) {
            throw SolverError(ErrorCode::kUnboundedAlpha,
                              "no finite alpha: d" + at(u, v) + " > 0 but d" +
                                  at(u, w) + " + d" + at(w, v) + " = 0");
          }
          continue;  // 0/0 carries no constraint
        }
        alpha = std::max(alpha, duv / detour);
      }
    }
  }

  SemiMetric m;
  m.dist = dist;
  m.alpha = alpha;
  return m;
}

double pairwise_sum(const SemiMetric& m, const ElementSet& s) {
  require_valid_indices(s, m.size(), "pairwise_sum");
  if (s.size() < 2) return 0.0;
  return m.dist(s.members(), s.members()).sum() / 2.0;
}

double cross_sum(const SemiMetric& m, const ElementSet& s, const ElementSet& t) {
  require_valid_indices(s, m.size(), "cross_sum");
  require_valid_indices(t, m.size(), "cross_sum");
  if (!disjoint(s, t)) {
    throw SolverError(ErrorCode::kOverlappingSets,
                      "cross_sum: sets overlap, " + to_string(s) + " vs " +
                          to_string(t));
  }
  if (s.empty() || t.empty()) return 0.0;
  return m.dist(s.members(), t.members()).sum();
}

double marginal_distance(const SemiMetric& m, int u, const ElementSet& s) {
  require_valid_indices(s, m.size(), "marginal_distance");
  if (u < 0 || u >= m.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "marginal_distance: element " + std::to_string(u) +
                          " outside ground set");
  }
  if (s.contains(u)) {
    throw SolverError(ErrorCode::kElementAlreadyInSet,
                      "element " + std::to_string(u) + " already in set");
  }
  if (s.empty()) return 0.0;
  return m.dist(u, Eigen::all)(s.members()).sum();
}

}  // namespace divmax
