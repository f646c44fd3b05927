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
#include <functional>
#include <optional>
#include <vector>

#include "orthomatroid/subset.hpp"

namespace orthomatroid {

/// A finite set with binary relations and a per-vertex invariant key.
/// relations[r][u] holds every v with R_r(u, v).
struct RelationalStructure {
  std::size_t size = 0;
  std::vector<std::vector<SubsetMask>> relations;
  std::vector<std::vector<std::size_t>> keys;
};

namespace detail {

/// Vertices ordered so that each one is as constrained as possible by those
/// placed before it: most relation links to placed vertices first, then the
/// rarest invariant key, then lowest index.
inline std::vector<std::size_t> search_order(const RelationalStructure& s) {
  std::vector<std::size_t> class_size(s.size, 0);
  for (std::size_t u = 0; u < s.size; ++u) {
    class_size[u] = static_cast<std::size_t>(std::count(s.keys.begin(), s.keys.end(), s.keys[u]));
  }
  std::vector<bool> placed(s.size, false);
  std::vector<std::size_t> links(s.size, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < s.size; ++step) {
    std::size_t best = s.size;
    for (std::size_t u = 0; u < s.size; ++u) {
      if (placed[u]) continue;
      if (best == s.size || links[u] > links[best] ||
          (links[u] == links[best] && class_size[u] < class_size[best])) {
        best = u;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (const auto& rel : s.relations) {
      for (std::size_t u = 0; u < s.size; ++u) {
        if (!placed[u] && (rel[best].contains(u) || rel[u].contains(best))) ++links[u];
      }
    }
  }
  return order;
}

}  // namespace detail

/// Backtracking search for a bijection a → b preserving every relation in
/// both directions and every invariant key. `accept`, when given, may reject
/// a complete candidate and resume the search. Returns mapping[a-vertex].
inline std::optional<std::vector<std::size_t>> find_isomorphism(
    const RelationalStructure& a, const RelationalStructure& b,
    const std::function<bool(const std::vector<std::size_t>&)>& accept = {}) {
  if (a.size != b.size || a.relations.size() != b.relations.size()) return std::nullopt;
  {
    auto ka = a.keys;
    auto kb = b.keys;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  const std::size_t n = a.size;
  const auto order = detail::search_order(a);
  std::vector<std::size_t> mapping(n, n);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t depth, std::size_t v, std::size_t w) {
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
      const auto& ra = a.relations[r];
      const auto& rb = b.relations[r];
      if (ra[v].contains(v) != rb[w].contains(w)) return false;
      for (std::size_t i = 0; i < depth; ++i) {
        const std::size_t u = order[i];
        const std::size_t mu = mapping[u];
        if (ra[u].contains(v) != rb[mu].contains(w)) return false;
        if (ra[v].contains(u) != rb[w].contains(mu)) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return !accept || accept(mapping);
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || a.keys[v] != b.keys[w] || !consistent(depth, v, w)) continue;
      mapping[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      mapping[v] = n;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return mapping;
}

}  // namespace orthomatroid
