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

#include "divmax/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "divmax/greedy.hpp"

namespace divmax {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the generator's raw bits; identical on every
// platform, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int bound) {  // [0, bound)
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// min(C(n, p), cap + 1); saturates instead of overflowing.
std::int64_t binomial_capped(int n, int p, std::int64_t cap) {
  if (p < 0 || p > n) return 0;
  p = std::min(p, n - p);
  long double count = 1.0L;
  for (int i = 1; i <= p; ++i) {
    count = count * static_cast<long double>(n - p + i) / static_cast<long double>(i);
    if (count > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::int64_t>(count + 0.5L);
}

RatioReport make_ratio(double exact, double heuristic, double bound) {
  RatioReport report;
  report.exact_value = exact;
  report.heuristic_value = heuristic;
  report.bound = bound;
  report.ratio = exact > 0.0 ? heuristic / exact : 1.0;
  report.satisfied = report.ratio >= bound - kTolerance;
  return report;
}

BoundCheck skipped_check(std::string name, std::string why) {
  BoundCheck check;
  check.name = std::move(name);
  check.skipped = true;
  check.holds = true;
  check.note = std::move(why);
  return check;
}

BoundCheck finish_check(std::string name, double lhs, double rhs,
                        std::string witness) {
  BoundCheck check;
  check.name = std::move(name);
  check.lhs = lhs;
  check.rhs = rhs;
  check.margin = lhs - rhs;
  check.holds = check.margin >= -kTolerance;
  check.note = std::move(witness);
  return check;
}

// pairs must map b onto c bijectively.
void require_bijection(const ElementSet& b, const ElementSet& c,
                       const std::vector<std::pair<int, int>>& pairs,
                       const char* where) {
  if (static_cast<int>(pairs.size()) != b.size() || b.size() != c.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      std::string(where) + ": mapping size mismatch");
  }
  std::vector<int> firsts, seconds;
  firsts.reserve(pairs.size());
  seconds.reserve(pairs.size());
  for (const auto& [from, to] : pairs) {
    firsts.push_back(from);
    seconds.push_back(to);
  }
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end());
  if (firsts != b.members() || seconds != c.members()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      std::string(where) + ": mapping is not a bijection from " +
                          to_string(b) + " onto " + to_string(c));
  }
}

}  // namespace

std::pair<ElementSet, double> exact_uniform(const Instance& inst, int p,
                                            std::int64_t max_states) {
  const int n = inst.size();
  if (p < 1 || p > n) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "exact_uniform needs 1 <= p <= n");
  }
  if (binomial_capped(n, p, max_states) > max_states) {
    throw SolverError(ErrorCode::kSearchSpaceTooLarge,
                      "C(" + std::to_string(n) + "," + std::to_string(p) +
                          ") exceeds the state cap of " +
                          std::to_string(max_states));
  }

  // Lexicographic combination scan; strict improvement keeps the
  // lexicographically smallest argmax.
  std::vector<int> idx(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
  ElementSet best;
  double best_value = 0.0;
  bool first = true;
  while (true) {
    ElementSet candidate{std::vector<int>(idx)};
    const double value = objective_value(inst, candidate);
    if (first || value > best_value) {
      best = std::move(candidate);
      best_value = value;
      first = false;
    }
    int i = p - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {best, best_value};
}

std::pair<ElementSet, double> exact_matroid(const Instance& inst,
                                            std::int64_t max_states) {
  const BasisEnumeration enumeration =
      enumerate_bases(inst.constraint, inst.size(), max_states);
  if (enumeration.truncated) {
    throw SolverError(ErrorCode::kSearchSpaceTooLarge,
                      "basis count exceeds the state cap of " +
                          std::to_string(max_states));
  }
  if (enumeration.bases.empty()) {
    throw SolverError(ErrorCode::kPreconditionViolated, "matroid has no basis");
  }
  const ElementSet* best = nullptr;
  double best_value = 0.0;
  for (const ElementSet& basis : enumeration.bases) {
    const double value = objective_value(inst, basis);
    if (best == nullptr || value > best_value) {
      best = &basis;
      best_value = value;
    }
  }
  return {*best, best_value};
}

BoundCheck check_cross_distance_bound(const SemiMetric& m, const ElementSet& x,
                                      const ElementSet& y) {
  const double cross = cross_sum(m, x, y);  // enforces disjointness
  const double lhs = m.alpha * static_cast<double>(x.size() - 1) * cross;
  const double rhs = static_cast<double>(y.size()) * pairwise_sum(m, x);
  return finish_check("cross-distance", lhs, rhs,
                      "x=" + to_string(x) + " y=" + to_string(y));
}

BoundCheck check_swap_value_bound(const Instance& inst, const ElementSet& s,
                                  const ElementSet& o,
                                  const std::vector<std::pair<int, int>>& g) {
  const ElementSet b = set_difference(s, o);
  const ElementSet c = set_difference(o, s);
  const int t = b.size();
  if (t == 0) return skipped_check("swap-value", "s == o, nothing to swap");
  if (t == 1) return skipped_check("swap-value", "single swap, needs t >= 2");
  if (b.size() != c.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "swap-value: |s \\ o| != |o \\ s| (not two bases?)");
  }
  require_bijection(b, c, g, "swap-value");

  double lhs = 0.0;
  for (const auto& [from, to] : g) {
    lhs += inst.objective.value(s.without(from).with(to));
  }
  const double rhs = static_cast<double>(t - 2) * inst.objective.value(s) +
                     inst.objective.value(o);
  return finish_check("swap-value", lhs, rhs,
                      "s=" + to_string(s) + " o=" + to_string(o) +
                          " t=" + std::to_string(t));
}

BoundCheck check_matched_cross_bound(
    const SemiMetric& m, const ElementSet& b, const ElementSet& c,
    const std::vector<std::pair<int, int>>& pairs) {
  if (b.size() != c.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "matched-cross: sets must have equal size");
  }
  require_bijection(b, c, pairs, "matched-cross");
  const int t = b.size();
  if (t <= 2) {
    return skipped_check("matched-cross",
                         "needs more than two matched pairs, t = " +
                             std::to_string(t));
  }
  double matched = 0.0;
  for (const auto& [from, to] : pairs) matched += m.dist(from, to);
  const double lhs = m.alpha * (cross_sum(m, b, c) - matched);
  const double rhs = pairwise_sum(m, c);
  return finish_check("matched-cross", lhs, rhs,
                      "b=" + to_string(b) + " c=" + to_string(c) +
                          " t=" + std::to_string(t));
}

BoundCheck check_swap_distance_bound(const Instance& inst, const ElementSet& s,
                                     const ElementSet& o,
                                     const std::vector<std::pair<int, int>>& g) {
  const ElementSet b = set_difference(s, o);
  const ElementSet c = set_difference(o, s);
  const int t = b.size();
  if (t == 0) return skipped_check("swap-distance", "s == o, nothing to swap");
  if (t == 1) return skipped_check("swap-distance", "single swap, needs t >= 2");
  if (b.size() != c.size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "swap-distance: |s \\ o| != |o \\ s| (not two bases?)");
  }
  if (t == 2 && rank(inst.constraint) <= 2) {
    // The two-swap case leans on an element shared by both bases; rank 2
    // with disjoint bases has none.
    return skipped_check("swap-distance", "t = 2 needs matroid rank > 2");
  }
  require_bijection(b, c, g, "swap-distance");

  const SemiMetric& m = inst.metric;
  double lhs = 0.0;
  for (const auto& [from, to] : g) {
    lhs += pairwise_sum(m, s.without(from).with(to));
  }
  const double rhs = static_cast<double>(t - 2) * pairwise_sum(m, s) +
                     pairwise_sum(m, o) / (m.alpha * m.alpha);
  return finish_check("swap-distance", lhs, rhs,
                      "s=" + to_string(s) + " o=" + to_string(o) +
                          " t=" + std::to_string(t));
}

SemiMetric gen_semimetric(int n, double beta, std::uint64_t seed) {
  if (n < 2) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "gen_semimetric needs n >= 2");
  }
  if (!(beta >= 1.0)) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "gen_semimetric needs beta >= 1");
  }
  std::mt19937_64 rng(splitmix64(seed));
  Matrix points(n, 2);
  for (int i = 0; i < n; ++i) {
    points(i, 0) = uniform01(rng);
    points(i, 1) = uniform01(rng);
  }
  Matrix dist = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double euclid = (points.row(i) - points.row(j)).norm();
      const double powered = std::pow(euclid, beta);
      dist(i, j) = powered;
      dist(j, i) = powered;
    }
  }
  return validate_semimetric(dist);
}

Instance gen_instance(const GenSpec& spec) {
  SemiMetric metric = gen_semimetric(spec.n, spec.beta, spec.seed);
  const int n = spec.n;
  // Separate stream so objective/constraint draws are not correlated with
  // the point coordinates.
  std::mt19937_64 rng(splitmix64(spec.seed ^ 0xC0FFEE5EEDull));

  SubmodularObjective objective = [&] {
    if (spec.objective == ObjectiveKind::kModular) {
      Vector weights(n);
      for (int i = 0; i < n; ++i) weights[i] = 10.0 * uniform01(rng);
      return SubmodularObjective::modular(std::move(weights));
    }
    const int topic_count = std::max(2, n / 2);
    Vector topic_weights(topic_count);
    for (int t = 0; t < topic_count; ++t) topic_weights[t] = 5.0 * uniform01(rng);
    std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      for (int t = 0; t < topic_count; ++t) {
        if (rng() & 1u) covers[static_cast<std::size_t>(e)].push_back(t);
      }
      if (covers[static_cast<std::size_t>(e)].empty()) {
        covers[static_cast<std::size_t>(e)].push_back(uniform_int(rng, topic_count));
      }
    }
    return SubmodularObjective::coverage(std::move(topic_weights),
                                         std::move(covers));
  }();

  const int target = std::clamp(spec.target_rank, 1, n);
  ConstraintSpec constraint;
  if (spec.constraint == ConstraintKind::kUniform) {
    constraint = uniform_constraint(target);
  } else {
    const int part_count =
        target < 2 ? 1 : std::min(target, 2 + uniform_int(rng, 2));
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(part_count));
    for (int e = 0; e < n; ++e) {
      parts[static_cast<std::size_t>(e % part_count)].push_back(e);
    }
    // One slot per part, remaining rank spread at random, then shifted off
    // any part it does not fit into.
    std::vector<int> caps(static_cast<std::size_t>(part_count), 1);
    for (int extra = 0; extra < target - part_count; ++extra) {
      ++caps[static_cast<std::size_t>(uniform_int(rng, part_count))];
    }
    for (int i = 0; i < part_count; ++i) {
      const int room = static_cast<int>(parts[static_cast<std::size_t>(i)].size());
      for (int j = 0; caps[static_cast<std::size_t>(i)] > room; ++j) {
        const int room_j = static_cast<int>(parts[static_cast<std::size_t>(j)].size());
        while (caps[static_cast<std::size_t>(i)] > room &&
               caps[static_cast<std::size_t>(j)] < room_j) {
          --caps[static_cast<std::size_t>(i)];
          ++caps[static_cast<std::size_t>(j)];
        }
      }
    }
    constraint = partition_constraint(std::move(parts), std::move(caps));
  }

  return make_instance(std::move(metric), std::move(objective), spec.lambda,
                       std::move(constraint));
}

RatioReport compare_greedy(const Instance& inst, std::int64_t max_states) {
  const SolveReport heuristic = greedy_solve(inst);
  const auto [best, exact] =
      exact_uniform(inst, inst.constraint.p, max_states);
  return make_ratio(exact, heuristic.objective_value,
                    1.0 / (2.0 * inst.metric.alpha));
}

RatioReport compare_local(const Instance& inst,
                          const LocalSearchOptions& options,
                          std::int64_t max_states) {
  const SolveReport heuristic = local_search_solve(inst, options);
  const auto [best, exact] = exact_matroid(inst, max_states);
  return make_ratio(exact, heuristic.objective_value,
                    1.0 / (2.0 * inst.metric.alpha * inst.metric.alpha));
}

}  // namespace divmax
