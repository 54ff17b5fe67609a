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

#include "divmax/objective.hpp"

#include <string>

namespace divmax {

const char* to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::kModular ? "modular" : "coverage";
}

SubmodularObjective SubmodularObjective::modular(Vector weights) {
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) {
      throw SolverError(ErrorCode::kNegativeEntry,
                        "negative weight at index " + std::to_string(i));
    }
  }
  SubmodularObjective f;
  f.kind_ = ObjectiveKind::kModular;
  f.weights_ = std::move(weights);
  return f;
}

SubmodularObjective SubmodularObjective::coverage(
    Vector topic_weights, std::vector<std::vector<int>> covers) {
  for (Eigen::Index t = 0; t < topic_weights.size(); ++t) {
    if (!(topic_weights[t] >= 0.0)) {
      throw SolverError(ErrorCode::kNegativeEntry,
                        "negative topic weight at index " + std::to_string(t));
    }
  }
  const int topic_count = static_cast<int>(topic_weights.size());
  for (std::size_t e = 0; e < covers.size(); ++e) {
    for (int t : covers[e]) {
      if (t < 0 || t >= topic_count) {
        throw SolverError(ErrorCode::kPreconditionViolated,
                          "element " + std::to_string(e) +
                              " covers unknown topic " + std::to_string(t));
      }
    }
  }
  SubmodularObjective f;
  f.kind_ = ObjectiveKind::kCoverage;
  f.topic_weights_ = std::move(topic_weights);
  f.covers_ = std::move(covers);
  return f;
}

int SubmodularObjective::size() const {
  return kind_ == ObjectiveKind::kModular ? static_cast<int>(weights_.size())
                                          : static_cast<int>(covers_.size());
}

double SubmodularObjective::value(const ElementSet& s) const {
  require_valid_indices(s, size(), "objective value");
  if (kind_ == ObjectiveKind::kModular) {
    double total = 0.0;
    for (int e : s) total += weights_[e];
    return total;
  }
  std::vector<char> covered(static_cast<std::size_t>(topic_weights_.size()), 0);
  for (int e : s) {
    for (int t : covers_[static_cast<std::size_t>(e)]) covered[static_cast<std::size_t>(t)] = 1;
  }
  double total = 0.0;
  for (Eigen::Index t = 0; t < topic_weights_.size(); ++t) {
    if (covered[static_cast<std::size_t>(t)]) total += topic_weights_[t];
  }
  return total;
}

double SubmodularObjective::marginal(int u, const ElementSet& s) const {
  require_valid_indices(s, size(), "objective marginal");
  if (u < 0 || u >= size()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "marginal: element " + std::to_string(u) +
                          " outside ground set");
  }
  if (s.contains(u)) {
    throw SolverError(ErrorCode::kElementAlreadyInSet,
                      "element " + std::to_string(u) + " already in set");
  }
  if (kind_ == ObjectiveKind::kModular) return weights_[u];

  // Gain = weights of u's topics nobody in s covers yet.
  std::vector<char> covered(static_cast<std::size_t>(topic_weights_.size()), 0);
  for (int e : s) {
    for (int t : covers_[static_cast<std::size_t>(e)]) covered[static_cast<std::size_t>(t)] = 1;
  }
  double gain = 0.0;
  for (int t : covers_[static_cast<std::size_t>(u)]) {
    if (!covered[static_cast<std::size_t>(t)]) {
      gain += topic_weights_[t];
      covered[static_cast<std::size_t>(t)] = 1;  // topics may repeat in a cover list
    }
  }
  return gain;
}

}  // namespace divmax
