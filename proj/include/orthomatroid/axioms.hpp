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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthomatroid/closed_sets.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

// Quantifying the exchange and straightening properties over closed F is
// enough: (F + y)^⊥ = F^⊥ ∩ {y}^⊥ = (F^⊥⊥ + y)^⊥, so (F + y)^⊥⊥ only
// depends on F^⊥⊥.
//
// Iteration order for witnesses: F over closed sets in canonical order, then
// x ascending, then y ascending. The first violation in that order is
// reported.

enum class Axiom { Exchange, Straightening, Orthobasis };

inline std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Exchange: return "exchange";
    case Axiom::Straightening: return "straightening";
    case Axiom::Orthobasis: return "orthobasis";
  }
  return "unknown";
}

/// Exchange: x ∈ cl(F + y) \ cl(F) but y ∉ cl(F + x).
/// Straightening: x ∉ cl(F) and no y ∈ F^⊥ has x ∈ cl(F + y).
/// Orthobasis: `basis` is a maximal orthoindependent subset of F and
/// x ∈ F \ cl(basis).
struct AxiomWitness {
  SubsetMask F;
  ElementId x = 0;
  std::optional<ElementId> y;
  std::optional<SubsetMask> basis;
};

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  std::optional<AxiomWitness> witness;
  std::size_t closed_sets_checked = 0;
};

struct OrthomatroidVerdict {
  AxiomVerdict exchange;
  AxiomVerdict straightening;
  bool holds() const { return exchange.holds && straightening.holds; }
};

/// Pairwise orthogonal; finitary by definition.
inline bool is_orthoindependent(const Orthoset& m, const SubsetMask& f) {
  detail::check_universe(m, f);
  bool ok = true;
  f.for_each([&](ElementId x) {
    if (ok && !f.without(x).is_subset_of(m.perp(x))) ok = false;
  });
  return ok;
}

/// No member lies in the closure of the others.
inline bool is_independent(const Orthoset& m, const SubsetMask& f) {
  detail::check_universe(m, f);
  bool ok = true;
  f.for_each([&](ElementId x) {
    if (ok && detail::closure_mask(m, f.without(x)).contains(x)) ok = false;
  });
  return ok;
}

namespace detail {

/// cl(C + x) for every x; entries for x ∈ C equal C.
inline std::vector<SubsetMask> single_extensions(const Orthoset& m, const SubsetMask& c) {
  std::vector<SubsetMask> out;
  out.reserve(m.size());
  for (ElementId x = 0; x < m.size(); ++x) {
    out.push_back(c.contains(x) ? c : closure_mask(m, c.with(x)));
  }
  return out;
}

/// Pivoting Bron–Kerbosch over the orthogonality graph restricted to
/// `candidates`: calls `visit` with every maximal orthoindependent subset.
inline void for_each_maximal_orthoindependent(
    const Orthoset& m, const SubsetMask& candidates,
    const std::function<void(const SubsetMask&)>& visit) {
  std::function<void(SubsetMask, SubsetMask, SubsetMask)> expand =
      [&](SubsetMask r, SubsetMask p, SubsetMask x) {
        if (p.none() && x.none()) {
          visit(r);
          return;
        }
        ElementId pivot = m.size();
        std::size_t best = 0;
        (p | x).for_each([&](ElementId u) {
          const std::size_t score = (p & m.perp(u)).count();
          if (pivot == m.size() || score > best) {
            pivot = u;
            best = score;
          }
        });
        const SubsetMask branch = p - m.perp(pivot);
        branch.for_each([&](ElementId v) {
          expand(r.with(v), p & m.perp(v), x & m.perp(v));
          p.erase(v);
          x.insert(v);
        });
      };
  expand(m.empty_set(), candidates, m.empty_set());
}

}  // namespace detail

inline AxiomVerdict check_exchange(const Orthoset& m, std::span<const ClosedSet> closed) {
  AxiomVerdict v{Axiom::Exchange, true, std::nullopt, 0};
  const std::size_t n = m.size();
  for (const ClosedSet& c : closed) {
    ++v.closed_sets_checked;
    const auto ext = detail::single_extensions(m, c.mask());
    for (ElementId x = 0; x < n; ++x) {
      if (c.contains(x)) continue;
      for (ElementId y = 0; y < n; ++y) {
        if (ext[y].contains(x) && !ext[x].contains(y)) {
          v.holds = false;
          v.witness = AxiomWitness{c.mask(), x, y, std::nullopt};
          return v;
        }
      }
    }
  }
  return v;
}

inline AxiomVerdict check_exchange(const Orthoset& m,
                                   std::size_t node_budget = kDefaultNodeBudget) {
  const auto closed = enumerate_closed_sets(m, node_budget);
  return check_exchange(m, closed);
}

inline AxiomVerdict check_straightening(const Orthoset& m, std::span<const ClosedSet> closed) {
  AxiomVerdict v{Axiom::Straightening, true, std::nullopt, 0};
  const std::size_t n = m.size();
  for (const ClosedSet& c : closed) {
    ++v.closed_sets_checked;
    const SubsetMask comp = detail::complement_mask(m, c.mask());
    std::vector<SubsetMask> ext(n);
    comp.for_each([&](ElementId y) { ext[y] = detail::closure_mask(m, c.mask().with(y)); });
    for (ElementId x = 0; x < n; ++x) {
      if (c.contains(x)) continue;
      bool found = false;
      comp.for_each([&](ElementId y) { found = found || ext[y].contains(x); });
      if (!found) {
        v.holds = false;
        v.witness = AxiomWitness{c.mask(), x, std::nullopt, std::nullopt};
        return v;
      }
    }
  }
  return v;
}

inline AxiomVerdict check_straightening(const Orthoset& m,
                                        std::size_t node_budget = kDefaultNodeBudget) {
  const auto closed = enumerate_closed_sets(m, node_budget);
  return check_straightening(m, closed);
}

/// Every maximal orthoindependent subset of every closed set spans it. For a
/// failing closed set, the witness basis is the canonically least offender.
inline AxiomVerdict check_orthobasis_axiom(const Orthoset& m, std::span<const ClosedSet> closed) {
  AxiomVerdict v{Axiom::Orthobasis, true, std::nullopt, 0};
  for (const ClosedSet& c : closed) {
    ++v.closed_sets_checked;
    std::optional<SubsetMask> worst;
    detail::for_each_maximal_orthoindependent(m, c.mask(), [&](const SubsetMask& j) {
      if (detail::closure_mask(m, j) != c.mask() && (!worst || canonical_less(j, *worst))) {
        worst = j;
      }
    });
    if (worst) {
      const SubsetMask missing = c.mask() - detail::closure_mask(m, *worst);
      v.holds = false;
      v.witness = AxiomWitness{c.mask(), missing.first(), std::nullopt, *worst};
      return v;
    }
  }
  return v;
}

inline AxiomVerdict check_orthobasis_axiom(const Orthoset& m,
                                           std::size_t node_budget = kDefaultNodeBudget) {
  const auto closed = enumerate_closed_sets(m, node_budget);
  return check_orthobasis_axiom(m, closed);
}

inline OrthomatroidVerdict is_orthomatroid(const Orthoset& m, std::span<const ClosedSet> closed) {
  return {check_exchange(m, closed), check_straightening(m, closed)};
}

inline OrthomatroidVerdict is_orthomatroid(const Orthoset& m,
                                           std::size_t node_budget = kDefaultNodeBudget) {
  const auto closed = enumerate_closed_sets(m, node_budget);
  return is_orthomatroid(m, closed);
}

/// An orthoset that has passed is_orthomatroid. Operations whose
/// precondition is "M is an orthomatroid" accept this to skip re-checking.
class Orthomatroid {
 public:
  static Orthomatroid certify(Orthoset m, std::size_t node_budget = kDefaultNodeBudget) {
    const auto verdict = is_orthomatroid(m, node_budget);
    if (!verdict.holds()) {
      const auto& failed = verdict.exchange.holds ? verdict.straightening : verdict.exchange;
      throw Error(ErrorCode::NotOrthomatroid,
                  std::string(to_string(failed.axiom)) + " property fails");
    }
    return Orthomatroid(std::move(m));
  }

  const Orthoset& orthoset() const { return m_; }
  operator const Orthoset&() const { return m_; }  // NOLINT

 private:
  explicit Orthomatroid(Orthoset m) : m_(std::move(m)) {}
  Orthoset m_;
};

struct Orthobasis {
  SubsetMask elements;
  ClosedSet spans;
};

/// Extends the orthoindependent `start` ⊆ cl(span) to an orthobasis of
/// cl(span) by greedily adding, in ascending order, every element of
/// cl(span) orthogonal to everything chosen so far.
inline Orthobasis complete_orthobasis(const Orthomatroid& om, const SubsetMask& span,
                                      const SubsetMask& start) {
  const Orthoset& m = om.orthoset();
  detail::check_universe(m, span);
  detail::check_universe(m, start);
  if (!is_orthoindependent(m, start)) {
    throw Error(ErrorCode::NotOrthoindependent,
                "start set " + format_subset(m, start) + " is not pairwise orthogonal");
  }
  const SubsetMask target = detail::closure_mask(m, span);
  if (!start.is_subset_of(target)) {
    throw Error(ErrorCode::NotInClosure, "start set " + format_subset(m, start) +
                                             " is not contained in the closure " +
                                             format_subset(m, target) + " of " +
                                             format_subset(m, span));
  }
  SubsetMask basis = start;
  target.for_each([&](ElementId x) {
    if (!basis.contains(x) && basis.is_subset_of(m.perp(x))) basis.insert(x);
  });
  if (!is_orthoindependent(m, basis) || detail::closure_mask(m, basis) != target) {
    throw Error(ErrorCode::Internal, "greedy extension " + format_subset(m, basis) +
                                         " does not span " + format_subset(m, target));
  }
  return Orthobasis{std::move(basis), ClosedSet::assume_closed(target)};
}

inline Orthobasis complete_orthobasis(const Orthoset& m, const SubsetMask& span,
                                      const SubsetMask& start) {
  return complete_orthobasis(Orthomatroid::certify(m), span, start);
}

struct Rank {
  std::size_t value = 0;
  friend bool operator==(const Rank&, const Rank&) = default;
};

enum class RankVerification {
  Auto,    ///< verify when n <= 16
  Always,
  Never,
};

inline constexpr std::size_t kRankVerifyMaxSize = 16;

/// Size of an orthobasis of cl(span). When verification runs, every maximal
/// orthoindependent subset of cl(span) is enumerated and must have that size.
inline Rank rank(const Orthomatroid& om, const SubsetMask& span,
                 RankVerification verify = RankVerification::Auto) {
  const Orthoset& m = om.orthoset();
  const Orthobasis b = complete_orthobasis(om, span, m.empty_set());
  const Rank r{b.elements.count()};
  const bool run = verify == RankVerification::Always ||
                   (verify == RankVerification::Auto && m.size() <= kRankVerifyMaxSize);
  if (run) {
    detail::for_each_maximal_orthoindependent(m, b.spans.mask(), [&](const SubsetMask& j) {
      if (j.count() != r.value) {
        throw Error(ErrorCode::Internal,
                    "maximal orthoindependent sets " + format_subset(m, j) + " and " +
                        format_subset(m, b.elements) + " differ in size");
      }
    });
  }
  return r;
}

inline Rank rank(const Orthoset& m, const SubsetMask& span,
                 RankVerification verify = RankVerification::Auto) {
  return rank(Orthomatroid::certify(m), span, verify);
}

}  // namespace orthomatroid
