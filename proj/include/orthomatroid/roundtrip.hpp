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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthomatroid/axioms.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/isomorphism.hpp"
#include "orthomatroid/lattice.hpp"
#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

/// O(S): the atoms of S (in ascending node order, labelled by node name)
/// with p ⊥ q ⟺ p ≤ q^⊥. Throws NotPropositionalSystem naming the first
/// failing property when S is not a propositional system.
inline Orthoset orthoset_of_lattice(const OrthoLattice& s) {
  const PropSysReport report = is_propositional_system(s);
  if (!report.is_propositional_system) {
    throw Error(ErrorCode::NotPropositionalSystem, report.first_failure() + " fails");
  }
  const auto& atoms = s.atoms();
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    labels.push_back(s.name(atoms[i]));
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (s.leq(atoms[i], s.ortho(atoms[j]))) pairs.emplace_back(i, j);
    }
  }
  return Orthoset::create(atoms.size(), pairs, std::move(labels));
}

/// Every singleton is closed.
inline bool is_simple(const Orthoset& m) {
  for (ElementId x = 0; x < m.size(); ++x) {
    if (detail::closure_mask(m, SubsetMask(m.size(), {x})).count() != 1) return false;
  }
  return true;
}

struct Simplification {
  Orthoset orthoset;
  /// quotient_map[x] is the element of `orthoset` standing for {x}^⊥⊥.
  std::vector<ElementId> quotient_map;
};

/// O(L(M)), with each element sent to the atom {x}^⊥⊥.
inline Simplification simplify(const Orthomatroid& om,
                               std::size_t node_budget = kDefaultNodeBudget) {
  const Orthoset& m = om.orthoset();
  const OrthoLattice l = build_lattice(m, node_budget);
  Simplification s{orthoset_of_lattice(l), {}};
  const auto& atoms = l.atoms();
  for (ElementId x = 0; x < m.size(); ++x) {
    const auto node = l.find(detail::closure_mask(m, SubsetMask(m.size(), {x})));
    const auto it = node ? std::find(atoms.begin(), atoms.end(), *node) : atoms.end();
    if (it == atoms.end()) {
      throw Error(ErrorCode::Internal, "closure of " + m.name(x) + " is not an atom");
    }
    s.quotient_map.push_back(static_cast<ElementId>(it - atoms.begin()));
  }
  return s;
}

inline Simplification simplify(const Orthoset& m,
                               std::size_t node_budget = kDefaultNodeBudget) {
  return simplify(Orthomatroid::certify(m, node_budget), node_budget);
}

struct OrthoIso {
  /// mapping[x] = φ(x)
  std::vector<ElementId> mapping;
};

struct LatticeIso {
  std::vector<NodeId> mapping;
};

/// The outcome of an isomorphism search: a witness, or the first invariant
/// that tells the two sides apart.
template <typename Iso>
struct IsoSearchResult {
  std::optional<Iso> iso;
  std::string distinguishing_invariant;
};

namespace detail {

/// Orthogonality graph with (degree, sorted neighbour degrees) keys.
inline RelationalStructure orthoset_structure(const Orthoset& m) {
  RelationalStructure s;
  s.size = m.size();
  std::vector<SubsetMask> rows;
  for (ElementId x = 0; x < m.size(); ++x) rows.push_back(m.perp(x));
  s.relations.push_back(std::move(rows));
  for (ElementId x = 0; x < m.size(); ++x) {
    std::vector<std::size_t> key{m.degree(x)};
    std::vector<std::size_t> nbr;
    m.perp(x).for_each([&](ElementId y) { nbr.push_back(m.degree(y)); });
    std::sort(nbr.begin(), nbr.end());
    key.insert(key.end(), nbr.begin(), nbr.end());
    s.keys.push_back(std::move(key));
  }
  return s;
}

inline std::vector<std::vector<std::size_t>> sorted_keys(const RelationalStructure& s) {
  auto keys = s.keys;
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

inline IsoSearchResult<OrthoIso> ortho_isomorphism_search(const Orthoset& a, const Orthoset& b) {
  if (a.size() != b.size()) {
    return {std::nullopt, "element count " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size())};
  }
  const auto pa = a.pairs().size();
  const auto pb = b.pairs().size();
  if (pa != pb) {
    return {std::nullopt,
            "orthogonal pair count " + std::to_string(pa) + " vs " + std::to_string(pb)};
  }
  std::vector<std::size_t> da, db;
  for (ElementId x = 0; x < a.size(); ++x) {
    da.push_back(a.degree(x));
    db.push_back(b.degree(x));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return {std::nullopt, "degree sequences differ"};
  const auto sa = detail::orthoset_structure(a);
  const auto sb = detail::orthoset_structure(b);
  if (detail::sorted_keys(sa) != detail::sorted_keys(sb)) {
    return {std::nullopt, "neighbour-degree multisets differ"};
  }
  if (auto mapping = find_isomorphism(sa, sb)) return {OrthoIso{std::move(*mapping)}, {}};
  return {std::nullopt, "no orthogonality-preserving bijection exists"};
}

/// A bijection φ with x ⊥ y ⟺ φ(x) ⊥ φ(y), if one exists.
inline std::optional<OrthoIso> ortho_isomorphic(const Orthoset& a, const Orthoset& b) {
  return ortho_isomorphism_search(a, b).iso;
}

/// Checks that `iso` is an orthoisomorphism a → b.
inline bool is_ortho_isomorphism(const Orthoset& a, const Orthoset& b, const OrthoIso& iso) {
  if (a.size() != b.size() || iso.mapping.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (ElementId y : iso.mapping) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (a.orthogonal(x, y) != b.orthogonal(iso.mapping[x], iso.mapping[y])) return false;
    }
  }
  return true;
}

/// Checks that `iso` is an order isomorphism commuting with ortho.
inline bool is_lattice_isomorphism(const OrthoLattice& a, const OrthoLattice& b,
                                   const LatticeIso& iso) {
  if (a.size() != b.size() || iso.mapping.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (NodeId w : iso.mapping) {
    if (w >= b.size() || hit[w]) return false;
    hit[w] = true;
  }
  for (NodeId p = 0; p < a.size(); ++p) {
    if (iso.mapping[a.ortho(p)] != b.ortho(iso.mapping[p])) return false;
    for (NodeId q = 0; q < a.size(); ++q) {
      if (a.leq(p, q) != b.leq(iso.mapping[p], iso.mapping[q])) return false;
    }
  }
  return true;
}

inline IsoSearchResult<LatticeIso> lattice_isomorphism_search(const OrthoLattice& a,
                                                              const OrthoLattice& b) {
  auto differ = [](const char* what, std::size_t x, std::size_t y) {
    return IsoSearchResult<LatticeIso>{
        std::nullopt, std::string(what) + " " + std::to_string(x) + " vs " + std::to_string(y)};
  };
  if (a.size() != b.size()) return differ("node count", a.size(), b.size());
  if (a.height() != b.height()) return differ("height", a.height(), b.height());
  if (a.atoms().size() != b.atoms().size()) {
    return differ("atom count", a.atoms().size(), b.atoms().size());
  }
  const auto ea = a.hasse_edges().size();
  const auto eb = b.hasse_edges().size();
  if (ea != eb) return differ("cover edge count", ea, eb);

  if (check_atomistic(a).holds && check_atomistic(b).holds) {
    // In an atomistic lattice v ≤ w ⟺ At(v) ⊆ At(w), so an orthogonality
    // preserving atom bijection that maps every atom set of a onto an atom
    // set of b is an order isomorphism; it remains to match ortho.
    const std::size_t k = a.atoms().size();
    auto atom_sets = [k](const OrthoLattice& l) {
      std::vector<SubsetMask> sets(l.size(), SubsetMask(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (NodeId v = 0; v < l.size(); ++v) {
          if (l.leq(l.atoms()[i], v)) sets[v].insert(i);
        }
      }
      return sets;
    };
    auto atom_structure = [k](const OrthoLattice& l) {
      std::vector<ElementPair> pairs;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (l.leq(l.atoms()[i], l.ortho(l.atoms()[j]))) pairs.emplace_back(i, j);
        }
      }
      return detail::orthoset_structure(Orthoset::create(k, pairs));
    };
    const auto sets_a = atom_sets(a);
    const auto sets_b = atom_sets(b);
    std::unordered_map<SubsetMask, NodeId, SubsetMaskHash> node_of_b;
    for (NodeId w = 0; w < b.size(); ++w) node_of_b.emplace(sets_b[w], w);
    LatticeIso found;
    auto extend = [&](const std::vector<std::size_t>& atom_map) {
      std::vector<NodeId> mapping(a.size());
      std::vector<bool> hit(b.size(), false);
      for (NodeId v = 0; v < a.size(); ++v) {
        SubsetMask image(k);
        sets_a[v].for_each([&](std::size_t i) { image.insert(atom_map[i]); });
        const auto it = node_of_b.find(image);
        if (it == node_of_b.end() || hit[it->second]) return false;
        hit[it->second] = true;
        mapping[v] = it->second;
      }
      for (NodeId v = 0; v < a.size(); ++v) {
        if (mapping[a.ortho(v)] != b.ortho(mapping[v])) return false;
      }
      found.mapping = std::move(mapping);
      return true;
    };
    const auto sa = atom_structure(a);
    const auto sb = atom_structure(b);
    if (find_isomorphism(sa, sb, extend)) return {std::move(found), {}};
    return {std::nullopt, "no atom bijection extends to an ortho-preserving lattice map"};
  }

  auto node_structure = [](const OrthoLattice& l) {
    RelationalStructure s;
    s.size = l.size();
    std::vector<SubsetMask> up(l.size(), SubsetMask(l.size()));
    std::vector<SubsetMask> orth(l.size(), SubsetMask(l.size()));
    for (NodeId p = 0; p < l.size(); ++p) {
      orth[p].insert(l.ortho(p));
      for (NodeId q = 0; q < l.size(); ++q) {
        if (l.leq(p, q)) up[p].insert(q);
      }
    }
    s.keys.resize(l.size());
    for (NodeId p = 0; p < l.size(); ++p) {
      std::size_t below = 0;
      for (NodeId q = 0; q < l.size(); ++q) below += up[q].contains(p) ? 1 : 0;
      s.keys[p] = {below, up[p].count()};
    }
    s.relations = {std::move(up), std::move(orth)};
    return s;
  };
  if (auto mapping = find_isomorphism(node_structure(a), node_structure(b))) {
    return {LatticeIso{std::move(*mapping)}, {}};
  }
  return {std::nullopt, "no order- and ortho-preserving bijection exists"};
}

inline std::optional<LatticeIso> lattice_isomorphic(const OrthoLattice& a, const OrthoLattice& b) {
  return lattice_isomorphism_search(a, b).iso;
}

}  // namespace orthomatroid
