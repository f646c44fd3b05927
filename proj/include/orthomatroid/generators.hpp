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
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orthomatroid/axioms.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"
#include "orthomatroid/roundtrip.hpp"

namespace orthomatroid {

/// Every pair orthogonal: the Boolean instance of rank n.
inline Orthoset discrete(std::size_t n) {
  std::vector<ElementPair> pairs;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Orthoset::create(n, pairs);
}

/// MO_n: 2n elements a1, a1p, ..., an, anp where only (2i, 2i+1) are
/// orthogonal.
inline Orthoset mo(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "mo(n) needs n >= 1");
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(2 * i, 2 * i + 1);
    labels.push_back("a" + std::to_string(i + 1));
    labels.push_back("a" + std::to_string(i + 1) + "p");
  }
  return Orthoset::create(2 * n, pairs, std::move(labels));
}

/// Each unordered pair, visited as (0,1), (0,2), ..., (n-2,n-1), is
/// orthogonal when the next 53-bit uniform draw of mt19937_64(seed) is
/// below `density`. Identical on every platform.
inline Orthoset random_orthoset(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<ElementPair> pairs;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pairs.emplace_back(i, j);
    }
  }
  return Orthoset::create(n, pairs);
}

inline constexpr std::size_t kDefaultEnumerationBound = 5;

/// Visits every orthoset on n labelled elements. Relations are read as
/// bitstrings b_0 b_1 ... over the pairs (0,1), (0,2), ..., (n-2,n-1) and
/// visited in lexicographic order, b_0 most significant.
inline void for_each_orthoset(std::size_t n, const std::function<void(const Orthoset&)>& visit,
                              std::size_t bound = kDefaultEnumerationBound) {
  if (n > bound) {
    throw Error(ErrorCode::ResourceLimit, "enumeration over " + std::to_string(n) +
                                              " elements exceeds the bound of " +
                                              std::to_string(bound));
  }
  std::vector<ElementPair> all;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  const std::size_t m = all.size();
  if (m >= 63) throw Error(ErrorCode::ResourceLimit, "too many relations to enumerate");
  std::vector<ElementPair> pairs;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    pairs.clear();
    for (std::size_t k = 0; k < m; ++k) {
      if ((code >> (m - 1 - k)) & 1U) pairs.push_back(all[k]);
    }
    visit(Orthoset::create(n, pairs));
  }
}

struct EnumerationOptions {
  /// Keep only the lexicographically first member of each orthoisomorphism
  /// class.
  bool up_to_isomorphism = false;
  std::size_t bound = kDefaultEnumerationBound;
};

inline std::vector<Orthoset> enumerate_orthomatroids(std::size_t n,
                                                     const EnumerationOptions& options = {}) {
  std::vector<Orthoset> out;
  for_each_orthoset(
      n,
      [&](const Orthoset& m) {
        if (!is_orthomatroid(m).holds()) return;
        if (options.up_to_isomorphism) {
          for (const auto& kept : out) {
            if (ortho_isomorphic(kept, m)) return;
          }
        }
        out.push_back(m);
      },
      options.bound);
  return out;
}

}  // namespace orthomatroid
