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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "divmax/matroid.hpp"

using namespace divmax;

namespace {

ConstraintSpec two_by_two() {
  return partition_constraint({{0, 1}, {2, 3}}, {1, 1});
}

// Random subset of [0, n).
ElementSet random_subset(std::mt19937_64& rng, int n) {
  std::vector<int> members;
  for (int e = 0; e < n; ++e) {
    if (rng() & 1u) members.push_back(e);
  }
  return ElementSet{members};
}

}  // namespace

TEST_CASE("constraint validation") {
  CHECK_NOTHROW(validate_constraint(uniform_constraint(2), 3));
  CHECK_THROWS_AS(validate_constraint(uniform_constraint(0), 3), SolverError);
  CHECK_THROWS_AS(validate_constraint(uniform_constraint(4), 3), SolverError);

  CHECK_NOTHROW(validate_constraint(two_by_two(), 4));
  // capacity above part size
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}, {2}}, {1, 2}), 3),
      SolverError);
  // overlapping parts
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}, {1, 2}}, {1, 1}), 3),
      SolverError);
  // uncovered element
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}}, {1}), 3), SolverError);
  // element outside the ground set
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}, {2, 7}}, {1, 1}), 3),
      SolverError);
  // mismatched capacity list
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}, {2}}, {1}), 3),
      SolverError);
  // zero total rank
  CHECK_THROWS_AS(
      validate_constraint(partition_constraint({{0, 1}}, {0}), 2), SolverError);
}

TEST_CASE("rank") {
  CHECK(rank(uniform_constraint(3)) == 3);
  CHECK(rank(two_by_two()) == 2);
  CHECK(rank(partition_constraint({{0}, {1, 2}, {3}, {4}}, {2, 1, 1, 0})) == 4);
}

TEST_CASE("independence oracles") {
  const ConstraintSpec uniform = uniform_constraint(2);
  CHECK(is_independent(uniform, {0, 1}));
  CHECK_FALSE(is_independent(uniform, {0, 1, 2}));
  CHECK(is_independent(uniform, {}));

  const ConstraintSpec partition = two_by_two();
  CHECK(is_independent(partition, {0, 2}));
  CHECK_FALSE(is_independent(partition, {0, 1}));
  CHECK(is_independent(partition, {}));
  // elements outside every part are loops
  CHECK_FALSE(is_independent(partition, {0, 4}));
}

TEST_CASE("independence is hereditary and satisfies the exchange axiom") {
  std::mt19937_64 rng(17);
  const int n = 8;
  const ConstraintSpec specs[] = {
      uniform_constraint(3),
      partition_constraint({{0, 1, 2}, {3, 4}, {5, 6, 7}}, {2, 1, 1})};
  for (const ConstraintSpec& c : specs) {
    for (int trial = 0; trial < 300; ++trial) {
      const ElementSet s = random_subset(rng, n);
      if (is_independent(c, s) && !s.empty()) {
        // Hereditary: drop any one element.
        const int victim =
            s.members()[static_cast<std::size_t>(rng() % s.members().size())];
        CHECK(is_independent(c, s.without(victim)));
      }
      const ElementSet t = random_subset(rng, n);
      if (is_independent(c, s) && is_independent(c, t) && s.size() < t.size()) {
        bool extended = false;
        for (int e : set_difference(t, s)) {
          if (is_independent(c, s.with(e))) {
            extended = true;
            break;
          }
        }
        CHECK(extended);
      }
    }
  }
}

TEST_CASE("extend to basis") {
  CHECK(extend_to_basis(uniform_constraint(3), {2}, 4) == ElementSet{0, 1, 2});
  CHECK(extend_to_basis(two_by_two(), {1}, 4) == ElementSet{1, 2});
  CHECK(extend_to_basis(uniform_constraint(2), {0, 3}, 4) == ElementSet{0, 3});
  CHECK_THROWS_AS(extend_to_basis(uniform_constraint(1), {0, 1}, 4),
                  SolverError);
}

TEST_CASE("exchange bijection on the uniform matroid") {
  const auto mapping =
      exchange_bijection(uniform_constraint(2), {0, 1}, {2, 3});
  REQUIRE(mapping.size() == 2);
  CHECK(mapping[0] == std::pair<int, int>{0, 2});
  CHECK(mapping[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("exchange bijection respects part capacities") {
  // x - 0 + 3 = {2,3} would overfill part {2,3}, so g(0) = 1 is forced.
  const auto mapping = exchange_bijection(two_by_two(), {0, 2}, {1, 3});
  REQUIRE(mapping.size() == 2);
  CHECK(mapping[0] == std::pair<int, int>{0, 1});
  CHECK(mapping[1] == std::pair<int, int>{2, 3});
}

TEST_CASE("exchange bijection corner cases") {
  CHECK(exchange_bijection(uniform_constraint(2), {}, {}).empty());
  CHECK_THROWS_AS(exchange_bijection(uniform_constraint(2), {0}, {1, 2}),
                  SolverError);
  CHECK_THROWS_AS(exchange_bijection(uniform_constraint(2), {0, 1}, {1, 2}),
                  SolverError);
  // dependent input
  CHECK_THROWS_AS(exchange_bijection(two_by_two(), {0, 1}, {2, 3}),
                  SolverError);
}

TEST_CASE("exchange bijection output keeps every swap independent") {
  std::mt19937_64 rng(23);
  const int n = 9;
  const ConstraintSpec c =
      partition_constraint({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, {1, 2, 1});
  for (int trial = 0; trial < 200; ++trial) {
    // Two disjoint independent sets of equal size, built by rejection.
    const ElementSet x = random_subset(rng, n);
    if (!is_independent(c, x)) continue;
    std::vector<int> rest;
    for (int e = 0; e < n; ++e) {
      if (!x.contains(e) && (rng() & 1u)) rest.push_back(e);
    }
    ElementSet y{rest};
    while (y.size() > x.size()) y.erase(y.members().back());
    if (y.size() != x.size() || !is_independent(c, y)) continue;

    const auto mapping = exchange_bijection(c, x, y);
    CHECK(static_cast<int>(mapping.size()) == x.size());
    ElementSet images;
    for (const auto& [from, to] : mapping) {
      CHECK(x.contains(from));
      CHECK(y.contains(to));
      images.insert(to);  // throws on duplicates: injectivity
      CHECK(is_independent(c, x.without(from).with(to)));
    }
  }
}

TEST_CASE("basis enumeration") {
  const BasisEnumeration uniform = enumerate_bases(uniform_constraint(2), 3, 100);
  CHECK_FALSE(uniform.truncated);
  REQUIRE(uniform.bases.size() == 3);
  CHECK(uniform.bases[0] == ElementSet{0, 1});
  CHECK(uniform.bases[1] == ElementSet{0, 2});
  CHECK(uniform.bases[2] == ElementSet{1, 2});

  const BasisEnumeration partition =
      enumerate_bases(partition_constraint({{0, 1}, {2}}, {1, 1}), 3, 100);
  CHECK_FALSE(partition.truncated);
  REQUIRE(partition.bases.size() == 2);
  CHECK(partition.bases[0] == ElementSet{0, 2});
  CHECK(partition.bases[1] == ElementSet{1, 2});

  const BasisEnumeration full = enumerate_bases(uniform_constraint(4), 4, 100);
  REQUIRE(full.bases.size() == 1);
  CHECK(full.bases[0] == ElementSet::full(4));

  const BasisEnumeration capped = enumerate_bases(uniform_constraint(2), 5, 3);
  CHECK(capped.truncated);
  CHECK(capped.bases.size() == 3);

  CHECK_THROWS_AS(enumerate_bases(uniform_constraint(2), 21, 100), SolverError);

  for (const ElementSet& basis : uniform.bases) {
    CHECK(basis.size() == rank(uniform_constraint(2)));
  }
}
