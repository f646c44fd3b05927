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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "orthomatroid/error.hpp"

namespace orthomatroid {

using ElementId = std::size_t;

/// A subset of the ground set {0, ..., n-1}, stored as packed 64-bit words.
/// Two masks only compare equal when they share the same universe size.
/// Sets up to 128 elements live inline without heap allocation.
class SubsetMask {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SubsetMask() = default;
  explicit SubsetMask(std::size_t universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  SubsetMask(std::size_t universe, std::initializer_list<ElementId> members)
      : SubsetMask(universe) {
    for (ElementId x : members) insert(x);
  }

  static SubsetMask empty(std::size_t universe) { return SubsetMask(universe); }

  static SubsetMask full(std::size_t universe) {
    SubsetMask s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static SubsetMask from_elements(std::size_t universe,
                                  std::span<const ElementId> members) {
    SubsetMask s(universe);
    for (ElementId x : members) s.insert(x);
    return s;
  }

  /// Bit i of `bits` becomes element i. Requires universe <= 64.
  static SubsetMask from_bits(std::size_t universe, Word bits) {
    SubsetMask s(universe);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.trim();
    return s;
  }

  /// Low 64 elements as a word; exact when universe <= 64.
  Word low_word() const { return words_.empty() ? Word{0} : words_[0]; }

  std::size_t universe() const { return universe_; }

  bool contains(ElementId x) const {
    return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U);
  }

  void insert(ElementId x) {
    check_range(x);
    words_[x / kWordBits] |= Word{1} << (x % kWordBits);
  }

  void erase(ElementId x) {
    check_range(x);
    words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
  }

  /// F + x
  SubsetMask with(ElementId x) const {
    SubsetMask s = *this;
    s.insert(x);
    return s;
  }

  /// F - x
  SubsetMask without(ElementId x) const {
    SubsetMask s = *this;
    s.erase(x);
    return s;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](Word w) { return w == 0; });
  }

  bool is_subset_of(const SubsetMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  bool is_proper_subset_of(const SubsetMask& other) const {
    return is_subset_of(other) && *this != other;
  }

  bool intersects(const SubsetMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  SubsetMask& operator&=(const SubsetMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  SubsetMask& operator|=(const SubsetMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// Set difference.
  SubsetMask& operator-=(const SubsetMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  /// Complement relative to the universe.
  SubsetMask operator~() const {
    SubsetMask s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Smallest member, or universe() when empty.
  ElementId first() const { return next(0); }

  /// Smallest member >= from, or universe() if there is none.
  ElementId next(ElementId from) const {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) {
        return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      }
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        fn(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    out.reserve(count());
    for_each([&](ElementId x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for_each([&](ElementId x) {
      if (!first_item) out += ',';
      out += std::to_string(x);
      first_item = false;
    });
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const SubsetMask& s) {
    return os << s.to_string();
  }

 private:
  static std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  void check_range(ElementId x) const {
    if (x >= universe_) {
      throw Error(ErrorCode::OutOfRange, "element " + std::to_string(x) +
                                             " outside ground set of size " +
                                             std::to_string(universe_));
    }
  }

  void trim() {
    const std::size_t tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << tail) - 1;
    }
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

/// Canonical order on subsets: by cardinality, then lexicographically by the
/// ascending member list. The empty set comes first and the full set last.
inline bool canonical_less(const SubsetMask& a, const SubsetMask& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const SubsetMask diff = (a - b) | (b - a);
  if (diff.none()) return false;
  return a.contains(diff.first());
}

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& s) const { return s.hash(); }
};

}  // namespace orthomatroid
