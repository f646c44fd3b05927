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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orthomatroid/axioms.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"
#include "orthomatroid/roundtrip.hpp"

namespace orthomatroid {

namespace detail {

inline void require_simple(const Orthoset& m) {
  for (ElementId x = 0; x < m.size(); ++x) {
    const SubsetMask cl = closure_mask(m, SubsetMask(m.size(), {x}));
    if (cl.count() != 1) {
      throw Error(ErrorCode::NotSimple, "closure of " + m.name(x) + " is " +
                                            format_subset(m, cl) + "; simplify first");
    }
  }
}

inline bool similar_unchecked(const Orthoset& m, ElementId x, ElementId y) {
  return closure_mask(m, SubsetMask(m.size(), {x, y})).count() != 2;
}

}  // namespace detail

/// x ∼ y ⟺ |{x, y}^⊥⊥| ≠ 2. Requires a simple orthoset.
inline bool similar(const Orthoset& m, ElementId x, ElementId y) {
  if (x >= m.size() || y >= m.size()) {
    throw Error(ErrorCode::OutOfRange, "element outside ground set");
  }
  detail::require_simple(m);
  return detail::similar_unchecked(m, x, y);
}

struct ComponentPartition {
  /// Blocks ordered by their smallest element.
  std::vector<SubsetMask> blocks;
  /// index[x] is the block containing x.
  std::vector<std::size_t> index;
};

/// Irreducible components of a simple orthomatroid. Transitivity of ∼ is
/// checked first; a failing triple (x, y, z) with x ∼ y, y ∼ z and x ≁ z is
/// reported as NotTransitive.
inline ComponentPartition components(const Orthomatroid& om) {
  const Orthoset& m = om.orthoset();
  detail::require_simple(m);
  const std::size_t n = m.size();
  std::vector<SubsetMask> sim(n, SubsetMask(n));
  for (ElementId x = 0; x < n; ++x) {
    sim[x].insert(x);
    for (ElementId y = x + 1; y < n; ++y) {
      if (detail::similar_unchecked(m, x, y)) {
        sim[x].insert(y);
        sim[y].insert(x);
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!sim[x].contains(y)) continue;
      const SubsetMask escaped = sim[y] - sim[x];
      if (!escaped.none()) {
        const ElementId z = escaped.first();
        throw Error(ErrorCode::NotTransitive,
                    m.name(x) + " ~ " + m.name(y) + " and " + m.name(y) + " ~ " + m.name(z) +
                        " but not " + m.name(x) + " ~ " + m.name(z));
      }
    }
  }
  ComponentPartition p;
  p.index.assign(n, n);
  for (ElementId x = 0; x < n; ++x) {
    if (p.index[x] != n) continue;
    const std::size_t id = p.blocks.size();
    p.blocks.push_back(sim[x]);
    sim[x].for_each([&](ElementId y) { p.index[y] = id; });
  }
  return p;
}

inline ComponentPartition components(const Orthoset& m) {
  detail::require_simple(m);
  return components(Orthomatroid::certify(m));
}

/// Single component and non-empty.
inline bool is_irreducible(const Orthomatroid& om) {
  return om.orthoset().size() >= 1 && components(om).blocks.size() == 1;
}

inline bool is_irreducible(const Orthoset& m) {
  detail::require_simple(m);
  return is_irreducible(Orthomatroid::certify(m));
}

/// Tagged disjoint union: parts occupy consecutive index ranges, elements
/// of different parts are orthogonal, and each part keeps its relation.
/// Labels become "i:label" whenever some part is labelled.
inline Orthoset disjoint_union(std::span<const Orthoset> parts) {
  std::size_t total = 0;
  bool labelled = false;
  for (const auto& part : parts) {
    total += part.size();
    labelled = labelled || part.has_labels();
  }
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Orthoset& part = parts[i];
    for (const auto& [a, b] : part.pairs()) pairs.emplace_back(offset + a, offset + b);
    for (ElementId x = 0; x < part.size(); ++x) {
      for (ElementId y = offset + part.size(); y < total; ++y) pairs.emplace_back(offset + x, y);
      if (labelled) labels.push_back(std::to_string(i) + ":" + part.name(x));
    }
    offset += part.size();
  }
  return Orthoset::create(total, pairs, std::move(labels));
}

inline Orthoset disjoint_union(std::initializer_list<Orthoset> parts) {
  return disjoint_union(std::span<const Orthoset>(parts.begin(), parts.size()));
}

}  // namespace orthomatroid
