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

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace divmax {

// Absolute comparison tolerance used uniformly across the library.
inline constexpr double kTolerance = 1e-9;

enum class ErrorCode {
  kNotSquare,
  kNegativeEntry,
  kNonZeroDiagonal,
  kAsymmetric,
  kUnboundedAlpha,
  kOverlappingSets,
  kElementAlreadyInSet,
  kNotIndependent,
  kNoPerfectMatching,
  kPreconditionViolated,
  kWrongConstraintKind,
  kPTooLarge,
  kRankTooSmall,
  kSearchSpaceTooLarge,
  kGroundSetTooLarge,
  kParseError,
};

const char* to_string(ErrorCode code);

// All recoverable failures surface as SolverError; `code()` identifies the
// violated invariant, `what()` is a one-line diagnostic.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A duplicate-free set of element indices, kept sorted ascending.
// Comparison is lexicographic on the sorted members.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<int> members);
  ElementSet(std::initializer_list<int> members)
      : ElementSet(std::vector<int>(members)) {}

  // {0, 1, ..., n-1}
  static ElementSet full(int n);

  bool contains(int e) const;
  void insert(int e);  // throws kElementAlreadyInSet on duplicates
  void erase(int e);   // throws kPreconditionViolated if absent

  ElementSet with(int e) const;
  ElementSet without(int e) const;

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<int> members_;
};

bool disjoint(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

// "{0,1,2}", used in diagnostics and report witnesses.
std::string to_string(const ElementSet& s);

// Throws kPreconditionViolated unless every index lies in [0, n).
void require_valid_indices(const ElementSet& s, int n, const char* where);

}  // namespace divmax
