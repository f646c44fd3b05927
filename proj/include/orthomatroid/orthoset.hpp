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
#include <utility>
#include <vector>

#include "orthomatroid/error.hpp"
#include "orthomatroid/subset.hpp"

namespace orthomatroid {

using ElementPair = std::pair<ElementId, ElementId>;

/// A finite set with a symmetric, anti-reflexive orthogonality relation.
///
/// Immutable once built. Row `perp(x)` holds {x}^⊥, so complements are
/// word-parallel intersections of rows. Labels are cosmetic; every operation
/// works on indices.
class Orthoset {
 public:
  Orthoset() = default;

  /// Builds the relation from unordered pairs. Duplicates and either order
  /// are accepted; a pair (i, i) or an index >= n is rejected.
  static Orthoset create(std::size_t n, std::span<const ElementPair> pairs,
                         std::vector<std::string> labels = {}) {
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorCode::InvalidArgument,
                  "expected " + std::to_string(n) + " labels, got " +
                      std::to_string(labels.size()));
    }
    Orthoset m;
    m.labels_ = std::move(labels);
    m.rows_.assign(n, SubsetMask(n));
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::OutOfRange,
                    "pair (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside ground set of size " + std::to_string(n));
      }
      if (a == b) {
        throw Error(ErrorCode::SelfOrthogonal,
                    "element " + std::to_string(a) + " cannot be orthogonal to itself");
      }
      m.rows_[a].insert(b);
      m.rows_[b].insert(a);
    }
    return m;
  }

  static Orthoset create(std::size_t n, std::initializer_list<ElementPair> pairs,
                         std::vector<std::string> labels = {}) {
    return create(n, std::span<const ElementPair>(pairs.begin(), pairs.size()),
                  std::move(labels));
  }

  std::size_t size() const { return rows_.size(); }

  bool orthogonal(ElementId a, ElementId b) const { return rows_.at(a).contains(b); }

  /// {x}^⊥
  const SubsetMask& perp(ElementId x) const { return rows_.at(x); }

  SubsetMask empty_set() const { return SubsetMask(size()); }
  SubsetMask ground_set() const { return SubsetMask::full(size()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The element's label, or its index when unlabeled.
  std::string name(ElementId x) const {
    return has_labels() ? labels_.at(x) : std::to_string(x);
  }

  /// Orthogonal pairs (i, j) with i < j, ascending.
  std::vector<ElementPair> pairs() const {
    std::vector<ElementPair> out;
    for (ElementId i = 0; i < size(); ++i) {
      rows_[i].for_each([&](ElementId j) {
        if (i < j) out.emplace_back(i, j);
      });
    }
    return out;
  }

  std::size_t degree(ElementId x) const { return rows_.at(x).count(); }

  friend bool operator==(const Orthoset& a, const Orthoset& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<SubsetMask> rows_;
  std::vector<std::string> labels_;
};

/// A subset known to satisfy F = F^⊥⊥. Only produced by orthocomplement and
/// closure, or asserted explicitly through `assume_closed`.
class ClosedSet {
 public:
  ClosedSet() = default;

  /// The caller vouches that `mask` is closed.
  static ClosedSet assume_closed(SubsetMask mask) { return ClosedSet(std::move(mask)); }

  const SubsetMask& mask() const { return mask_; }
  operator const SubsetMask&() const { return mask_; }  // NOLINT

  bool contains(ElementId x) const { return mask_.contains(x); }
  std::size_t count() const { return mask_.count(); }

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  explicit ClosedSet(SubsetMask mask) : mask_(std::move(mask)) {}
  SubsetMask mask_;
};

namespace detail {

inline void check_universe(const Orthoset& m, const SubsetMask& f) {
  if (f.universe() != m.size()) {
    throw Error(ErrorCode::OutOfRange,
                "subset over " + std::to_string(f.universe()) +
                    " elements used with an orthoset of size " + std::to_string(m.size()));
  }
}

inline SubsetMask complement_mask(const Orthoset& m, const SubsetMask& f) {
  SubsetMask out = m.ground_set();
  f.for_each([&](ElementId y) { out &= m.perp(y); });
  return out;
}

inline SubsetMask closure_mask(const Orthoset& m, const SubsetMask& f) {
  return complement_mask(m, complement_mask(m, f));
}

}  // namespace detail

/// F^⊥ = { x | x ⊥ y for every y in F }. Always closed.
inline ClosedSet orthocomplement(const Orthoset& m, const SubsetMask& f) {
  detail::check_universe(m, f);
  return ClosedSet::assume_closed(detail::complement_mask(m, f));
}

/// F^⊥⊥
inline ClosedSet closure(const Orthoset& m, const SubsetMask& f) {
  detail::check_universe(m, f);
  return ClosedSet::assume_closed(detail::closure_mask(m, f));
}

inline bool is_closed(const Orthoset& m, const SubsetMask& f) {
  return closure(m, f).mask() == f;
}

/// The sub-orthoset induced on `keep`, with elements renumbered in ascending
/// order. `old_ids[i]` is the original index of new element i.
struct Restriction {
  Orthoset orthoset;
  std::vector<ElementId> old_ids;
};

inline Restriction restrict_to(const Orthoset& m, const SubsetMask& keep) {
  detail::check_universe(m, keep);
  Restriction r;
  r.old_ids = keep.elements();
  std::vector<ElementId> new_id(m.size(), m.size());
  for (std::size_t i = 0; i < r.old_ids.size(); ++i) new_id[r.old_ids[i]] = i;
  std::vector<ElementPair> pairs;
  for (const auto& [a, b] : m.pairs()) {
    if (keep.contains(a) && keep.contains(b)) pairs.emplace_back(new_id[a], new_id[b]);
  }
  std::vector<std::string> labels;
  if (m.has_labels()) {
    for (ElementId x : r.old_ids) labels.push_back(m.labels()[x]);
  }
  r.orthoset = Orthoset::create(r.old_ids.size(), pairs, std::move(labels));
  return r;
}

/// Relabels a mask's members with names, e.g. "{a1,a2}".
inline std::string format_subset(const Orthoset& m, const SubsetMask& f) {
  std::string out = "{";
  bool first = true;
  f.for_each([&](ElementId x) {
    if (!first) out += ',';
    out += m.name(x);
    first = false;
  });
  return out + "}";
}

}  // namespace orthomatroid
