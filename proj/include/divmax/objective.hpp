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

#include <vector>

#include "divmax/semimetric.hpp"
#include "divmax/types.hpp"

namespace divmax {

enum class ObjectiveKind { kModular, kCoverage };

const char* to_string(ObjectiveKind kind);

/// A nonnegative monotone submodular set function with f(∅) = 0.
///
/// Two variants ship:
///  - modular: f(S) = Σ_{e∈S} weights[e], constant marginals;
///  - weighted coverage: f(S) = Σ weights of topics covered by any e ∈ S,
///    with diminishing marginals.
/// Both are monotone submodular by construction.
class SubmodularObjective {
 public:
  static SubmodularObjective modular(Vector weights);
  static SubmodularObjective coverage(Vector topic_weights,
                                      std::vector<std::vector<int>> covers);

  ObjectiveKind kind() const { return kind_; }
  int size() const;  // ground-set element count

  double value(const ElementSet& s) const;

  /// f(s + u) - f(s); nonnegative. u must not be in s.
  double marginal(int u, const ElementSet& s) const;

  const Vector& weights() const { return weights_; }
  const Vector& topic_weights() const { return topic_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  SubmodularObjective() = default;

  ObjectiveKind kind_ = ObjectiveKind::kModular;
  Vector weights_;        // modular
  Vector topic_weights_;  // coverage
  std::vector<std::vector<int>> covers_;
};

}  // namespace divmax
