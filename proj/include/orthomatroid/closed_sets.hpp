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

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

inline constexpr std::size_t kDefaultNodeBudget = 50000;

/// Every closed set of `m`, in canonical order (see canonical_less).
///
/// Closed sets are exactly the intersections of subfamilies of
/// { {x}^⊥ | x ∈ E }, the empty subfamily giving E. Starting from E and
/// intersecting with one row at a time reaches all of them. Throws
/// ResourceLimit once more than `budget` distinct sets have been found.
inline std::vector<ClosedSet> enumerate_closed_sets(const Orthoset& m,
                                                    std::size_t budget = kDefaultNodeBudget) {
  const std::size_t n = m.size();
  std::unordered_set<SubsetMask, SubsetMaskHash> seen;
  std::deque<SubsetMask> frontier;
  auto discover = [&](SubsetMask s) {
    if (seen.insert(s).second) {
      if (seen.size() > budget) {
        throw Error(ErrorCode::ResourceLimit,
                    "closed-set count exceeded the node budget of " + std::to_string(budget) +
                        " (reached " + std::to_string(seen.size()) + ")");
      }
      frontier.push_back(std::move(s));
    }
  };
  discover(m.ground_set());
  while (!frontier.empty()) {
    SubsetMask current = std::move(frontier.front());
    frontier.pop_front();
    for (ElementId x = 0; x < n; ++x) {
      if (current.is_subset_of(m.perp(x))) continue;
      discover(current & m.perp(x));
    }
  }
  discover(m.empty_set());

  std::vector<SubsetMask> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<ClosedSet> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(ClosedSet::assume_closed(std::move(s)));
  return out;
}

}  // namespace orthomatroid
