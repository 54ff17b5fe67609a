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

#include "divmax/types.hpp"

#include <algorithm>
#include <iterator>

namespace divmax {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::kAsymmetric: return "Asymmetric";
    case ErrorCode::kUnboundedAlpha: return "UnboundedAlpha";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kElementAlreadyInSet: return "ElementAlreadyInSet";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kWrongConstraintKind: return "WrongConstraintKind";
    case ErrorCode::kPTooLarge: return "PTooLarge";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

ElementSet::ElementSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "duplicate element " + std::to_string(*dup) + " in set");
  }
}

ElementSet ElementSet::full(int n) {
  ElementSet s;
  s.members_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.members_[static_cast<std::size_t>(i)] = i;
  return s;
}

bool ElementSet::contains(int e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

void ElementSet::insert(int e) {
  auto pos = std::lower_bound(members_.begin(), members_.end(), e);
  if (pos != members_.end() && *pos == e) {
    throw SolverError(ErrorCode::kElementAlreadyInSet,
                      "element " + std::to_string(e) + " already in set");
  }
  members_.insert(pos, e);
}

void ElementSet::erase(int e) {
  auto pos = std::lower_bound(members_.begin(), members_.end(), e);
  if (pos == members_.end() || *pos != e) {
    throw SolverError(ErrorCode::kPreconditionViolated,
                      "element " + std::to_string(e) + " not in set");
  }
  members_.erase(pos);
}

ElementSet ElementSet::with(int e) const {
  ElementSet copy = *this;
  copy.insert(e);
  return copy;
}

ElementSet ElementSet::without(int e) const {
  ElementSet copy = *this;
  copy.erase(e);
  return copy;
}

bool disjoint(const ElementSet& a, const ElementSet& b) {
  auto ai = a.members().begin(), ae = a.members().end();
  auto bi = b.members().begin(), be = b.members().end();
  while (ai != ae && bi != be) {
    if (*ai == *bi) return false;
    if (*ai < *bi) ++ai; else ++bi;
  }
  return true;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  std::vector<int> out;
  std::set_difference(a.members().begin(), a.members().end(),
                      b.members().begin(), b.members().end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  std::vector<int> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.members()[i]);
  }
  out += '}';
  return out;
}

void require_valid_indices(const ElementSet& s, int n, const char* where) {
  for (int e : s) {
    if (e < 0 || e >= n) {
      throw SolverError(ErrorCode::kPreconditionViolated,
                        std::string(where) + ": element " + std::to_string(e) +
                            " outside ground set of size " + std::to_string(n));
    }
  }
}

}  // namespace divmax
