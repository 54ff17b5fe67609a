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
#include <vector>

#include "divmax/types.hpp"

namespace divmax {

enum class ConstraintKind { kUniform, kPartition };

const char* to_string(ConstraintKind kind);

/// Independence system for the solvers: either a uniform matroid
/// (|S| <= p) or a partition matroid (per-part selection capacities).
/// Partition parts must be pairwise disjoint and cover the ground set.
struct ConstraintSpec {
  ConstraintKind kind = ConstraintKind::kUniform;
  int p = 1;  // uniform rank
  std::vector<std::vector<int>> parts;
  std::vector<int> capacities;
};

ConstraintSpec uniform_constraint(int p);
ConstraintSpec partition_constraint(std::vector<std::vector<int>> parts,
                                    std::vector<int> capacities);

/// Loader-side invariant checks against a ground set of size n:
/// uniform needs 1 <= p <= n; partition needs disjoint in-range parts that
/// cover [0, n), capacities[i] <= |parts[i]|, and total rank >= 1.
void validate_constraint(const ConstraintSpec& c, int n);

int rank(const ConstraintSpec& c);

bool is_independent(const ConstraintSpec& c, const ElementSet& s);

/// Grows an independent set into a basis, scanning candidate elements in
/// ascending index order. A set that is already a basis comes back unchanged.
ElementSet extend_to_basis(const ConstraintSpec& c, const ElementSet& s, int n);

/// For disjoint same-size independent sets x, y, returns a bijection
/// g : x -> y with x - e + g(e) independent for every e in x, as (e, g(e))
/// pairs sorted by e. Computed as a maximum matching on the feasibility
/// graph {(e, e') : x - e + e' independent} via augmenting paths; for sets
/// obtained as the symmetric-difference halves of two bases a perfect
/// matching always exists. kNoPerfectMatching signals inputs outside that
/// guarantee.
std::vector<std::pair<int, int>> exchange_bijection(const ConstraintSpec& c,
                                                    const ElementSet& x,
                                                    const ElementSet& y);

struct BasisEnumeration {
  std::vector<ElementSet> bases;  // lexicographic order
  bool truncated = false;         // hit `cap` before exhausting
};

/// All bases over ground set [0, n) in lexicographic order, truncated at
/// `cap`. Guards n <= 20 (kGroundSetTooLarge).
BasisEnumeration enumerate_bases(const ConstraintSpec& c, int n,
                                 std::int64_t cap);

}  // namespace divmax
