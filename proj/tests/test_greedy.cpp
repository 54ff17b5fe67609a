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

#include "divmax/greedy.hpp"
#include "divmax/testkit.hpp"
#include "oracles.hpp"

using namespace divmax;

namespace {

Instance worked_example(int p) {
  Matrix d(3, 3);
  d << 0, 1, 1,
       1, 0, 2,
       1, 2, 0;
  Vector w(3);
  w << 4, 1, 0;
  return make_instance(validate_semimetric(d), SubmodularObjective::modular(w),
                       1.0, uniform_constraint(p));
}

}  // namespace

TEST_CASE("p = 1 picks the heaviest element") {
  const SolveReport report = greedy_solve(worked_example(1));
  CHECK(report.selected == ElementSet{0});
  CHECK(report.objective_value == 4.0);
  CHECK(report.iterations == 1);
  CHECK(report.algorithm == "greedy");
}

TEST_CASE("the worked example selects 0 then 1") {
  const SolveReport report = greedy_solve(worked_example(2));
  CHECK(report.selected == ElementSet{0, 1});
  CHECK(report.objective_value == 6.0);
  REQUIRE(report.trace.size() == 2);
  CHECK(report.trace[0].added == 0);
  CHECK(report.trace[0].value == 2.0);  // half of w = 4
  CHECK(report.trace[1].added == 1);
  CHECK(report.trace[1].value == 1.5);  // beats element 2's score of 1.0
}

TEST_CASE("p = n returns the whole ground set") {
  const Instance inst = worked_example(3);
  const SolveReport report = greedy_solve(inst);
  CHECK(report.selected == ElementSet::full(3));
  CHECK(oracles::near(report.objective_value,
                      oracles::phi_direct(inst, {0, 1, 2})));
}

TEST_CASE("constraint guards") {
  const Instance inst = worked_example(2);
  Instance partition = inst;
  partition.constraint = partition_constraint({{0, 1}, {2}}, {1, 1});
  CHECK_THROWS_AS(greedy_solve(partition), SolverError);

  // Bypassing make_instance to hit the defensive p checks.
  Instance oversized = inst;
  oversized.constraint = uniform_constraint(5);
  CHECK_THROWS_AS(greedy_solve(oversized), SolverError);
  Instance empty = inst;
  empty.constraint = uniform_constraint(0);
  CHECK_THROWS_AS(greedy_solve(empty), SolverError);
}

TEST_CASE("every picked score dominates the remaining elements") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_instance({
        .n = 8,
        .beta = 2.0,
        .objective =
            seed % 2 == 0 ? ObjectiveKind::kModular : ObjectiveKind::kCoverage,
        .lambda = 0.5,
        .target_rank = 4,
        .seed = seed});
    const SolveReport report = greedy_solve(inst);
    REQUIRE(report.selected.size() == 4);
    REQUIRE(report.trace.size() == 4);

    ElementSet prefix;
    for (const TraceStep& step : report.trace) {
      for (int u = 0; u < inst.size(); ++u) {
        if (prefix.contains(u)) continue;
        CHECK(step.value >= scaled_marginal(inst, u, prefix) - 1e-9);
      }
      CHECK(oracles::near(step.value,
                          scaled_marginal(inst, step.added, prefix)));
      prefix.insert(step.added);
    }
    CHECK(prefix == report.selected);
  }
}

TEST_CASE("greedy is deterministic") {
  const Instance inst = gen_instance({.n = 9, .beta = 1.5, .seed = 5});
  const SolveReport a = greedy_solve(inst);
  const SolveReport b = greedy_solve(inst);
  CHECK(a.selected == b.selected);
  CHECK(a.objective_value == b.objective_value);
}

TEST_CASE("greedy meets the 1/(2 alpha) guarantee on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = gen_instance({
        .n = 7,
        .beta = seed % 2 == 0 ? 2.0 : 3.0,
        .objective =
            seed % 2 == 0 ? ObjectiveKind::kCoverage : ObjectiveKind::kModular,
        .lambda = 1.0,
        .target_rank = 3,
        .seed = 400 + seed});
    const SolveReport report = greedy_solve(inst);
    const double exact = oracles::best_phi_by_bitmask(
        inst, [](const std::vector<int>& s) { return s.size() == 3; });
    CHECK(report.objective_value >=
          exact / (2.0 * inst.metric.alpha) - 1e-9);
    CHECK(report.objective_value <= exact + 1e-9);
  }
}
