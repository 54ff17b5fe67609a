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

#include "divmax/matroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace divmax {

namespace {

constexpr int kMaxEnumerationGroundSet = 20;

// part_of[e] = index of the part containing e, or -1.
std::vector<int> part_lookup(const ConstraintSpec& c, int n) {
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t pi = 0; pi < c.parts.size(); ++pi) {
    for (int e : c.parts[pi]) {
      if (e >= 0 && e < n) part_of[static_cast<std::size_t>(e)] = static_cast<int>(pi);
    }
  }
  return part_of;
}

}  // namespace

const char* to_string(ConstraintKind kind) {
  return kind == ConstraintKind::kUniform ? "uniform" : "partition";
}

ConstraintSpec uniform_constraint(int p) {
  ConstraintSpec c;
  c.kind = ConstraintKind::kUniform;
  c.p = p;
  return c;
}

ConstraintSpec partition_constraint(std::vector<std::vector<int>> parts,
                                    std::vector<int> capacities) {
  ConstraintSpec c;
  c.kind = ConstraintKind::kPartition;
  c.parts = std::move(parts);
  c.capacities = std::move(capacities);
  return c;
}

void validate_constraint(const ConstraintSpec& c, int n) {
  if (c.kind == ConstraintKind::kUniform) {
    if (c.p < 1 || c.p > n) {
      throw SolverError(ErrorCode::kPreconditionViolated,
                        "uniform constraint needs 1 <= p <= n, got p = " +
                            std::to_string(c.p) + " with n = " + std::to_string(n));
    }
    return;
  }
  if (c.parts.size() != c.capacities.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "partition has " + std::to_string(c.parts.size()) +
                          " parts but " + std::to_string(c.capacities.size()) +
                          " capacities");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t pi = 0; pi < c.parts.size(); ++pi) {
    if (c.capacities[pi] < 0 ||
        c.capacities[pi] > static_cast<int>(c.parts[pi].size())) {
      throw SolverError(ErrorCode::kPreconditionViolated,
                        "capacity of part " + std::to_string(pi) +
                            " must lie in [0, |part|]");
    }
    for (int e : c.parts[pi]) {
      if (e < 0 || e >= n) {
        throw SolverError(ErrorCode::kPreconditionViolated,
                          "part " + std::to_string(pi) + " contains element " +
                              std::to_string(e) + " outside ground set");
      }
      if (seen[static_cast<std::size_t>(e)]) {
        throw SolverError(ErrorCode::kPreconditionViolated,
                          "parts overlap at element " + std::to_string(e));
      }
      seen[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (int e = 0; e < n; ++e) {
    if (!seen[static_cast<std::size_t>(e)]) {
      throw SolverError(ErrorCode::kPreconditionViolated,
                        "partition does not cover element " + std::to_string(e));
    }
  }
  if (rank(c) < 1) {
    throw SolverError(ErrorCode::kRankTooSmall,
                      "partition rank must be at least 1");
  }
}

int rank(const ConstraintSpec& c) {
  if (c.kind == ConstraintKind::kUniform) return c.p;
  return std::accumulate(c.capacities.begin(), c.capacities.end(), 0);
}

bool is_independent(const ConstraintSpec& c, const ElementSet& s) {
  if (c.kind == ConstraintKind::kUniform) return s.size() <= c.p;

  std::vector<int> used(c.parts.size(), 0);
  for (int e : s) {
    int part = -1;
    for (std::size_t pi = 0; pi < c.parts.size(); ++pi) {
      if (std::find(c.parts[pi].begin(), c.parts[pi].end(), e) != c.parts[pi].end()) {
        part = static_cast<int>(pi);
        break;
      }
    }
    if (part < 0) return false;  // uncovered elements are loops
    if (++used[static_cast<std::size_t>(part)] > c.capacities[static_cast<std::size_t>(part)]) return false;
  }
  return true;
}

ElementSet extend_to_basis(const ConstraintSpec& c, const ElementSet& s, int n) {
  require_valid_indices(s, n, "extend_to_basis");
  if (!is_independent(c, s)) {
    throw SolverError(ErrorCode::kNotIndependent,
                      "set " + to_string(s) + " is not independent");
  }
  const int target = rank(c);
  ElementSet basis = s;

  if (c.kind == ConstraintKind::kUniform) {
    for (int e = 0; e < n && basis.size() < target; ++e) {
      if (!basis.contains(e)) basis.insert(e);
    }
    return basis;
  }

  const std::vector<int> part_of = part_lookup(c, n);
  std::vector<int> used(c.parts.size(), 0);
  for (int e : basis) ++used[static_cast<std::size_t>(part_of[static_cast<std::size_t>(e)])];
  for (int e = 0; e < n && basis.size() < target; ++e) {
    if (basis.contains(e)) continue;
    const int part = part_of[static_cast<std::size_t>(e)];
    if (part < 0 || used[static_cast<std::size_t>(part)] >= c.capacities[static_cast<std::size_t>(part)]) continue;
    basis.insert(e);
    ++used[static_cast<std::size_t>(part)];
  }
  return basis;
}

std::vector<std::pair<int, int>> exchange_bijection(const ConstraintSpec& c,
                                                    const ElementSet& x,
                                                    const ElementSet& y) {
  if (x.size() != y.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "exchange_bijection needs |x| = |y|, got " +
                          std::to_string(x.size()) + " and " +
                          std::to_string(y.size()));
  }
  if (!disjoint(x, y)) {
    throw SolverError(ErrorCode::kOverlappingSets,
                      "exchange_bijection: sets overlap, " + to_string(x) +
                          " vs " + to_string(y));
  }
  if (!is_independent(c, x) || !is_independent(c, y)) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "exchange_bijection: inputs must be independent");
  }
  const int t = x.size();
  if (t == 0) return {};

  // Feasibility graph: edge (i, j) iff x - x_i + y_j stays independent.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    const ElementSet base = x.without(x.members()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < t; ++j) {
      if (is_independent(c, base.with(y.members()[static_cast<std::size_t>(j)]))) {
        adj[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }

  // Augmenting-path maximum matching, x side processed in ascending order.
  // Trying free partners before re-matching keeps the result deterministic.
  std::vector<int> match_x(static_cast<std::size_t>(t), -1);
  std::vector<int> match_y(static_cast<std::size_t>(t), -1);
  std::vector<int> visited(static_cast<std::size_t>(t), -1);

  std::function<bool(int, int)> augment = [&](int i, int phase) -> bool {
    visited[static_cast<std::size_t>(i)] = phase;
    for (int j : adj[static_cast<std::size_t>(i)]) {
      if (match_y[static_cast<std::size_t>(j)] == -1) {
        match_x[static_cast<std::size_t>(i)] = j;
        match_y[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    for (int j : adj[static_cast<std::size_t>(i)]) {
      const int owner = match_y[static_cast<std::size_t>(j)];
      if (visited[static_cast<std::size_t>(owner)] != phase && augment(owner, phase)) {
        match_x[static_cast<std::size_t>(i)] = j;
        match_y[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < t; ++i) {
    if (!augment(i, i)) {
      throw SolverError(ErrorCode::kNoPerfectMatching,
                        "no feasible exchange bijection between " + to_string(x) +
                            " and " + to_string(y));
    }
  }

  std::vector<std::pair<int, int>> mapping;
  mapping.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    mapping.emplace_back(x.members()[static_cast<std::size_t>(i)],
                         y.members()[static_cast<std::size_t>(match_x[static_cast<std::size_t>(i)])]);
  }
  return mapping;
}

BasisEnumeration enumerate_bases(const ConstraintSpec& c, int n,
                                 std::int64_t cap) {
  if (n > kMaxEnumerationGroundSet) {
    throw SolverError(ErrorCode::kGroundSetTooLarge,
                      "basis enumeration supports n <= " +
                          std::to_string(kMaxEnumerationGroundSet) + ", got n = " +
                          std::to_string(n));
  }
  const int target = rank(c);
  BasisEnumeration out;

  // DFS over elements in ascending order emits bases lexicographically.
  std::vector<int> current;
  std::function<void(int)> grow = [&](int next) {
    if (out.truncated) return;
    if (static_cast<int>(current.size()) == target) {
      if (static_cast<std::int64_t>(out.bases.size()) >= cap) {
        out.truncated = true;
        return;
      }
      out.bases.push_back(ElementSet(current));
      return;
    }
    const int missing = target - static_cast<int>(current.size());
    for (int e = next; e <= n - missing; ++e) {
      current.push_back(e);
      if (is_independent(c, ElementSet(current))) grow(e + 1);
      current.pop_back();
      if (out.truncated) return;
    }
  };
  grow(0);
  return out;
}

}  // namespace divmax
