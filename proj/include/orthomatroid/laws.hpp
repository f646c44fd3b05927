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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

enum class Law {
  Symmetry,
  AntiReflexivity,
  GaloisDisjoint,
  GaloisAdjunction,
  Extensivity,
  Monotony,
  Idempotence,
};

inline std::string_view to_string(Law law) {
  switch (law) {
    case Law::Symmetry: return "symmetry";
    case Law::AntiReflexivity: return "anti_reflexivity";
    case Law::GaloisDisjoint: return "galois_disjoint";
    case Law::GaloisAdjunction: return "galois_adjunction";
    case Law::Extensivity: return "extensivity";
    case Law::Monotony: return "monotony";
    case Law::Idempotence: return "idempotence";
  }
  return "unknown";
}

/// Counterexample for a law. Subsets are listed in the order the law
/// quantifies them (F, then G); elements are used by the relation laws.
struct LawWitness {
  std::vector<SubsetMask> subsets;
  std::vector<ElementId> elements;
};

struct LawReport {
  Law law;
  bool holds = true;
  std::optional<LawWitness> witness;
  std::size_t checked_count = 0;
  bool exhaustive = true;
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0f0e7a11ULL;

/// A law is checked exhaustively when the number of instances it quantifies
/// over (2^n for one subset, 3^n for nested pairs F ⊆ G, 4^n for arbitrary
/// pairs) is at most `exhaustive_limit`; otherwise `sample_size` instances
/// are drawn from a generator seeded with `seed`.
struct LawCheckOptions {
  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit;
  std::size_t sample_size = 4096;
  std::uint64_t seed = kDefaultSeed;
};

namespace detail {

/// base^n if it does not exceed `limit`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t n,
                                                  std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (value > limit / base) return std::nullopt;
    value *= base;
  }
  if (value > limit) return std::nullopt;
  return value;
}

/// Complement of every subset of a small ground set, indexed by bit pattern.
inline std::vector<std::uint64_t> complement_table(const Orthoset& m) {
  const std::size_t n = m.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  table[0] = full;
  for (std::uint64_t u = 1; u < table.size(); ++u) {
    const auto low = static_cast<std::size_t>(std::countr_zero(u));
    table[u] = table[u & (u - 1)] & m.perp(low).low_word();
  }
  return table;
}

inline SubsetMask random_subset(std::size_t n, std::mt19937_64& rng) {
  SubsetMask s(n);
  std::uint64_t bits = 0;
  for (ElementId x = 0; x < n; ++x) {
    if (x % 64 == 0) bits = rng();
    if ((bits >> (x % 64)) & 1U) s.insert(x);
  }
  return s;
}

inline LawReport violated(Law law, LawWitness witness, std::size_t checked, bool exhaustive) {
  return LawReport{law, false, std::move(witness), checked, exhaustive};
}

inline SubsetMask small_mask(std::size_t n, std::uint64_t bits) {
  return SubsetMask::from_bits(n, bits);
}

}  // namespace detail

/// Symmetry and anti-reflexivity of the stored relation.
inline std::vector<LawReport> check_relation_laws(const Orthoset& m) {
  const std::size_t n = m.size();
  LawReport sym{Law::Symmetry, true, std::nullopt, 0, true};
  LawReport anti{Law::AntiReflexivity, true, std::nullopt, 0, true};
  for (ElementId a = 0; a < n; ++a) {
    ++anti.checked_count;
    if (anti.holds && m.orthogonal(a, a)) {
      anti.holds = false;
      anti.witness = LawWitness{{}, {a}};
    }
    for (ElementId b = 0; b < n; ++b) {
      ++sym.checked_count;
      if (sym.holds && m.orthogonal(a, b) != m.orthogonal(b, a)) {
        sym.holds = false;
        sym.witness = LawWitness{{}, {a, b}};
      }
    }
  }
  return {sym, anti};
}

/// F ∩ F^⊥ = ∅ and G ⊆ F^⊥ ⟺ F ⊆ G^⊥.
inline std::vector<LawReport> check_galois(const Orthoset& m,
                                           const LawCheckOptions& options = {}) {
  const std::size_t n = m.size();
  std::vector<LawReport> reports;
  std::optional<std::vector<std::uint64_t>> table;
  auto small_table = [&]() -> const std::vector<std::uint64_t>& {
    if (!table) table = detail::complement_table(m);
    return *table;
  };

  // F ∩ F^⊥ = ∅
  if (auto total = detail::bounded_power(2, n, options.exhaustive_limit); total && n < 64) {
    const auto& comp = small_table();
    LawReport r{Law::GaloisDisjoint, true, std::nullopt, 0, true};
    for (std::uint64_t u = 0; u < *total; ++u) {
      ++r.checked_count;
      if (u & comp[u]) {
        r = detail::violated(Law::GaloisDisjoint, {{detail::small_mask(n, u)}, {}},
                             r.checked_count, true);
        break;
      }
    }
    reports.push_back(std::move(r));
  } else {
    std::mt19937_64 rng(options.seed);
    LawReport r{Law::GaloisDisjoint, true, std::nullopt, 0, false};
    for (std::size_t i = 0; i < options.sample_size; ++i) {
      SubsetMask f = detail::random_subset(n, rng);
      ++r.checked_count;
      if (f.intersects(detail::complement_mask(m, f))) {
        r = detail::violated(Law::GaloisDisjoint, {{f}, {}}, r.checked_count, false);
        break;
      }
    }
    reports.push_back(std::move(r));
  }

  // G ⊆ F^⊥ ⟺ F ⊆ G^⊥
  if (auto total = detail::bounded_power(4, n, options.exhaustive_limit); total && n < 32) {
    const auto& comp = small_table();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    LawReport r{Law::GaloisAdjunction, true, std::nullopt, 0, true};
    for (std::uint64_t f = 0; f < subsets && r.holds; ++f) {
      for (std::uint64_t g = 0; g < subsets; ++g) {
        ++r.checked_count;
        const bool left = (g & ~comp[f]) == 0;
        const bool right = (f & ~comp[g]) == 0;
        if (left != right) {
          r = detail::violated(Law::GaloisAdjunction,
                               {{detail::small_mask(n, f), detail::small_mask(n, g)}, {}},
                               r.checked_count, true);
          break;
        }
      }
    }
    reports.push_back(std::move(r));
  } else {
    std::mt19937_64 rng(options.seed + 1);
    LawReport r{Law::GaloisAdjunction, true, std::nullopt, 0, false};
    for (std::size_t i = 0; i < options.sample_size; ++i) {
      SubsetMask f = detail::random_subset(n, rng);
      SubsetMask g = detail::random_subset(n, rng);
      ++r.checked_count;
      const bool left = g.is_subset_of(detail::complement_mask(m, f));
      const bool right = f.is_subset_of(detail::complement_mask(m, g));
      if (left != right) {
        r = detail::violated(Law::GaloisAdjunction, {{f, g}, {}}, r.checked_count, false);
        break;
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

/// Extensivity, Monotony and Idempotence of F ↦ F^⊥⊥.
inline std::vector<LawReport> check_closure_laws(const Orthoset& m,
                                                 const LawCheckOptions& options = {}) {
  const std::size_t n = m.size();
  std::vector<LawReport> reports;
  std::optional<std::vector<std::uint64_t>> table;
  auto small_table = [&]() -> const std::vector<std::uint64_t>& {
    if (!table) table = detail::complement_table(m);
    return *table;
  };
  std::mt19937_64 rng(options.seed + 2);

  const auto unary = detail::bounded_power(2, n, options.exhaustive_limit);
  const bool unary_exhaustive = unary.has_value() && n < 64;

  for (Law law : {Law::Extensivity, Law::Idempotence}) {
    LawReport r{law, true, std::nullopt, 0, unary_exhaustive};
    if (unary_exhaustive) {
      const auto& comp = small_table();
      for (std::uint64_t u = 0; u < *unary; ++u) {
        ++r.checked_count;
        const std::uint64_t cl = comp[comp[u]];
        const bool ok = law == Law::Extensivity ? (u & ~cl) == 0 : comp[comp[cl]] == cl;
        if (!ok) {
          r = detail::violated(law, {{detail::small_mask(n, u)}, {}}, r.checked_count, true);
          break;
        }
      }
    } else {
      for (std::size_t i = 0; i < options.sample_size; ++i) {
        SubsetMask f = detail::random_subset(n, rng);
        ++r.checked_count;
        const SubsetMask cl = detail::closure_mask(m, f);
        const bool ok = law == Law::Extensivity ? f.is_subset_of(cl)
                                                : detail::closure_mask(m, cl) == cl;
        if (!ok) {
          r = detail::violated(law, {{f}, {}}, r.checked_count, false);
          break;
        }
      }
    }
    reports.push_back(std::move(r));
  }

  // F ⊆ G ⟹ F^⊥⊥ ⊆ G^⊥⊥, over nested pairs.
  const auto nested = detail::bounded_power(3, n, options.exhaustive_limit);
  LawReport mono{Law::Monotony, true, std::nullopt, 0, nested.has_value() && n < 64};
  if (mono.exhaustive) {
    const auto& comp = small_table();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t g = 0; g < subsets && mono.holds; ++g) {
      const std::uint64_t clg = comp[comp[g]];
      // Walk every submask f of g, including g and 0.
      for (std::uint64_t f = g;; f = (f - 1) & g) {
        ++mono.checked_count;
        if ((comp[comp[f]] & ~clg) != 0) {
          mono = detail::violated(Law::Monotony,
                                  {{detail::small_mask(n, f), detail::small_mask(n, g)}, {}},
                                  mono.checked_count, true);
          break;
        }
        if (f == 0) break;
      }
    }
  } else {
    for (std::size_t i = 0; i < options.sample_size; ++i) {
      SubsetMask g = detail::random_subset(n, rng);
      SubsetMask f = g & detail::random_subset(n, rng);
      ++mono.checked_count;
      if (!detail::closure_mask(m, f).is_subset_of(detail::closure_mask(m, g))) {
        mono = detail::violated(Law::Monotony, {{f, g}, {}}, mono.checked_count, false);
        break;
      }
    }
  }
  reports.insert(reports.begin() + 1, std::move(mono));
  return reports;
}

inline bool all_hold(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r.holds) return false;
  }
  return true;
}

}  // namespace orthomatroid
