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
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthomatroid/closed_sets.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

using NodeId = std::size_t;

/// A finite lattice with an orthocomplement map.
///
/// Every node carries a set representation and the order is inclusion of
/// representations. For L(M) the representation is the closed set itself;
/// for a lattice given by its order it is the node's down-set. Meets, joins,
/// complements and cover edges are precomputed or looked up by hash, so an
/// L(M) with tens of thousands of nodes never materializes an n×n order.
class OrthoLattice {
 public:
  enum class Origin { Orthoset, External };

  /// L(M): the closed sets of `m` ordered by inclusion, with F ↦ F^⊥.
  static OrthoLattice from_orthoset(const Orthoset& m,
                                    std::size_t node_budget = kDefaultNodeBudget) {
    OrthoLattice l;
    l.origin_ = Origin::Orthoset;
    l.source_ = m;
    for (ClosedSet& c : enumerate_closed_sets(m, node_budget)) {
      l.names_.push_back(format_subset(m, c.mask()));
      l.repr_.push_back(c.mask());
    }
    l.index_primary();
    const std::size_t count = l.repr_.size();
    l.ortho_.resize(count);
    for (NodeId i = 0; i < count; ++i) {
      l.ortho_[i] = l.lookup(detail::complement_mask(m, l.repr_[i]));
    }
    // Upper covers of C are the minimal sets among cl(C + x), x ∉ C: any
    // closed G ⊋ C contains some x ∉ C and then cl(C + x) ⊆ G.
    l.covers_.resize(count);
    for (NodeId i = 0; i < count; ++i) {
      std::vector<NodeId> candidates;
      const SubsetMask& c = l.repr_[i];
      for (ElementId x = 0; x < m.size(); ++x) {
        if (!c.contains(x)) candidates.push_back(l.lookup(detail::closure_mask(m, c.with(x))));
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (NodeId g : candidates) {
        const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](NodeId h) {
          return h != g && l.repr_[h].is_proper_subset_of(l.repr_[g]);
        });
        if (minimal) l.covers_[i].push_back(g);
      }
    }
    l.bottom_ = l.lookup(m.empty_set());
    l.top_ = l.lookup(m.ground_set());
    l.finish();
    return l;
  }

  /// A lattice given by node names, generating order pairs (i ≤ j; the
  /// reflexive-transitive closure is taken) and an orthocomplement map.
  /// Throws MalformedLattice unless the order is a lattice and `ortho` is a
  /// total map into the nodes; the ortholattice laws themselves are left to
  /// the checkers.
  static OrthoLattice from_order(std::vector<std::string> names,
                                 std::span<const std::pair<NodeId, NodeId>> leq_pairs,
                                 std::vector<NodeId> ortho) {
    const std::size_t count = names.size();
    if (count == 0) throw Error(ErrorCode::MalformedLattice, "a lattice needs at least one node");
    if (ortho.size() != count) {
      throw Error(ErrorCode::MalformedLattice,
                  "ortho map has " + std::to_string(ortho.size()) + " entries for " +
                      std::to_string(count) + " nodes");
    }
    for (NodeId o : ortho) {
      if (o >= count) throw Error(ErrorCode::MalformedLattice, "ortho entry out of range");
    }
    OrthoLattice l;
    l.origin_ = Origin::External;
    l.names_ = std::move(names);
    l.ortho_ = std::move(ortho);
    std::vector<SubsetMask> up(count, SubsetMask(count));
    for (NodeId i = 0; i < count; ++i) up[i].insert(i);
    for (const auto& [a, b] : leq_pairs) {
      if (a >= count || b >= count) {
        throw Error(ErrorCode::MalformedLattice, "order pair out of range");
      }
      up[a].insert(b);
    }
    // Warshall on rows.
    for (NodeId k = 0; k < count; ++k) {
      for (NodeId i = 0; i < count; ++i) {
        if (up[i].contains(k)) up[i] |= up[k];
      }
    }
    std::vector<SubsetMask> down(count, SubsetMask(count));
    for (NodeId i = 0; i < count; ++i) {
      up[i].for_each([&](NodeId j) { down[j].insert(i); });
    }
    for (NodeId i = 0; i < count; ++i) {
      const SubsetMask both = up[i] & down[i];
      if (both.count() != 1) {
        throw Error(ErrorCode::MalformedLattice,
                    "order is not antisymmetric at node " + l.names_[i]);
      }
    }
    l.repr_ = std::move(down);
    l.up_ = std::move(up);
    l.index_primary();
    for (NodeId i = 0; i < count; ++i) l.up_index_.emplace(l.up_[i], i);
    for (NodeId i = 0; i < count; ++i) {
      for (NodeId j = i + 1; j < count; ++j) {
        if (!l.up_index_.contains(l.up_[i] & l.up_[j]) ||
            !l.index_.contains(l.repr_[i] & l.repr_[j])) {
          throw Error(ErrorCode::MalformedLattice,
                      "nodes " + l.names_[i] + " and " + l.names_[j] + " lack a meet or join");
        }
      }
    }
    l.covers_.resize(count);
    for (NodeId i = 0; i < count; ++i) {
      l.up_[i].for_each([&](NodeId j) {
        if (j != i && (l.up_[i] & l.repr_[j]).count() == 2) l.covers_[i].push_back(j);
      });
    }
    const SubsetMask all = SubsetMask::full(count);
    l.bottom_ = l.up_index_.at(all);
    l.top_ = l.index_.at(all);
    l.finish();
    return l;
  }

  Origin origin() const { return origin_; }
  std::size_t size() const { return repr_.size(); }
  NodeId bottom() const { return bottom_; }
  NodeId top() const { return top_; }
  NodeId ortho(NodeId i) const { return ortho_.at(i); }
  const std::string& name(NodeId i) const { return names_.at(i); }

  bool leq(NodeId a, NodeId b) const { return repr_.at(a).is_subset_of(repr_.at(b)); }

  NodeId meet(NodeId a, NodeId b) const { return lookup(repr_.at(a) & repr_.at(b)); }

  NodeId join(NodeId a, NodeId b) const {
    if (origin_ == Origin::Orthoset) {
      return lookup(detail::closure_mask(*source_, repr_.at(a) | repr_.at(b)));
    }
    return up_index_.at(up_.at(a) & up_.at(b));
  }

  /// Upper covers of a node, ascending.
  const std::vector<NodeId>& covers(NodeId i) const { return covers_.at(i); }

  /// Cover pairs (lower, upper), ascending.
  std::vector<std::pair<NodeId, NodeId>> hasse_edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId i = 0; i < size(); ++i) {
      for (NodeId j : covers_[i]) out.emplace_back(i, j);
    }
    return out;
  }

  const std::vector<NodeId>& atoms() const { return atoms_; }

  /// Length of the longest chain from bottom to top.
  std::size_t height() const { return height_; }

  /// The closed set of a node of L(M). Only meaningful for Origin::Orthoset.
  const SubsetMask& closed_set(NodeId i) const {
    if (origin_ != Origin::Orthoset) {
      throw Error(ErrorCode::InvalidArgument, "lattice was not built from an orthoset");
    }
    return repr_.at(i);
  }

  /// The orthoset a lattice was built from, if any.
  const Orthoset* source() const { return source_ ? &*source_ : nullptr; }

  /// Node whose closed set is `s`, for lattices built from an orthoset.
  std::optional<NodeId> find(const SubsetMask& s) const {
    if (origin_ != Origin::Orthoset) return std::nullopt;
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void index_primary() {
    for (NodeId i = 0; i < repr_.size(); ++i) index_.emplace(repr_[i], i);
  }

  NodeId lookup(const SubsetMask& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
      throw Error(ErrorCode::Internal, "set " + s.to_string() + " is not a lattice node");
    }
    return it->second;
  }

  void finish() {
    atoms_ = covers_[bottom_];
    std::vector<NodeId> order(size());
    for (NodeId i = 0; i < size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return repr_[a].count() < repr_[b].count();
    });
    std::vector<std::size_t> depth(size(), 0);
    for (NodeId i : order) {
      for (NodeId j : covers_[i]) depth[j] = std::max(depth[j], depth[i] + 1);
    }
    height_ = depth[top_];
  }

  Origin origin_ = Origin::External;
  std::optional<Orthoset> source_;
  std::vector<std::string> names_;
  std::vector<SubsetMask> repr_;
  std::vector<SubsetMask> up_;
  std::unordered_map<SubsetMask, NodeId, SubsetMaskHash> index_;
  std::unordered_map<SubsetMask, NodeId, SubsetMaskHash> up_index_;
  std::vector<NodeId> ortho_;
  std::vector<std::vector<NodeId>> covers_;
  std::vector<NodeId> atoms_;
  NodeId bottom_ = 0;
  NodeId top_ = 0;
  std::size_t height_ = 0;
};

/// The closed sets of `m` in canonical order.
inline std::vector<ClosedSet> closed_sets(const Orthoset& m,
                                          std::size_t node_budget = kDefaultNodeBudget) {
  return enumerate_closed_sets(m, node_budget);
}

inline OrthoLattice build_lattice(const Orthoset& m,
                                  std::size_t node_budget = kDefaultNodeBudget) {
  return OrthoLattice::from_orthoset(m, node_budget);
}

/// Atoms a with a ≤ node, ascending.
inline std::vector<NodeId> atoms_below(const OrthoLattice& l, NodeId node) {
  std::vector<NodeId> out;
  for (NodeId a : l.atoms()) {
    if (l.leq(a, node)) out.push_back(a);
  }
  return out;
}

struct LatticeVerdict {
  bool holds = true;
  /// Offending nodes, in the order the property quantifies them.
  std::vector<NodeId> witness;
  /// Offending ground element, for the element form of atom covering.
  std::optional<ElementId> element;
  std::size_t checked = 0;
  std::string note;
};

/// ortho is an order-reversing involution with P ∧ P^⊥ = 0 and P ∨ P^⊥ = 1.
inline LatticeVerdict check_ortholattice(const OrthoLattice& l) {
  LatticeVerdict v;
  for (NodeId p = 0; p < l.size(); ++p) {
    ++v.checked;
    const NodeId po = l.ortho(p);
    if (l.ortho(po) != p) {
      v = {false, {p}, std::nullopt, v.checked, "ortho is not an involution"};
      return v;
    }
    if (l.meet(p, po) != l.bottom() || l.join(p, po) != l.top()) {
      v = {false, {p}, std::nullopt, v.checked, "P and its ortho are not complements"};
      return v;
    }
  }
  for (NodeId p = 0; p < l.size(); ++p) {
    for (NodeId q = 0; q < l.size(); ++q) {
      if (!l.leq(p, q)) continue;
      ++v.checked;
      if (!l.leq(l.ortho(q), l.ortho(p))) {
        v = {false, {p, q}, std::nullopt, v.checked, "ortho does not reverse the order"};
        return v;
      }
    }
  }
  return v;
}

/// P ≤ Q ⟹ P = Q ∧ (P ∨ Q^⊥), for all ordered pairs (P major, Q minor).
inline LatticeVerdict check_orthomodular(const OrthoLattice& l) {
  LatticeVerdict v;
  for (NodeId p = 0; p < l.size(); ++p) {
    for (NodeId q = 0; q < l.size(); ++q) {
      if (!l.leq(p, q)) continue;
      ++v.checked;
      if (l.meet(q, l.join(p, l.ortho(q))) != p) {
        v.holds = false;
        v.witness = {p, q};
        return v;
      }
    }
  }
  return v;
}

/// Every node is the join of the atoms below it.
inline LatticeVerdict check_atomistic(const OrthoLattice& l) {
  LatticeVerdict v;
  for (NodeId p = 0; p < l.size(); ++p) {
    ++v.checked;
    NodeId acc = l.bottom();
    for (NodeId a : atoms_below(l, p)) acc = l.join(acc, a);
    if (acc != p) {
      v.holds = false;
      v.witness = {p};
      return v;
    }
  }
  return v;
}

/// Covering law. With `m` (the orthoset L was built from): for every closed
/// F and x ∉ F, cl(F + x) covers F; the witness is (F, cl(F + x), H) with
/// F < H < cl(F + x). Without `m`: for every node F and atom p ≰ F, F ∨ p
/// covers F; the witness is (F, p, H) with F < H < F ∨ p.
inline LatticeVerdict check_atom_covering(const OrthoLattice& l, const Orthoset* m = nullptr) {
  LatticeVerdict v;
  auto strictly_between = [&](NodeId f, NodeId g) -> std::optional<NodeId> {
    for (NodeId h : l.covers(f)) {
      if (h != g && l.leq(h, g)) return h;
    }
    return std::nullopt;
  };
  if (m != nullptr) {
    if (l.origin() != OrthoLattice::Origin::Orthoset || l.source() == nullptr ||
        !(*l.source() == *m)) {
      throw Error(ErrorCode::InvalidArgument, "lattice was not built from this orthoset");
    }
    for (NodeId f = 0; f < l.size(); ++f) {
      const SubsetMask& fs = l.closed_set(f);
      for (ElementId x = 0; x < m->size(); ++x) {
        if (fs.contains(x)) continue;
        ++v.checked;
        const NodeId g = *l.find(detail::closure_mask(*m, fs.with(x)));
        if (auto h = strictly_between(f, g)) {
          v.holds = false;
          v.witness = {f, g, *h};
          v.element = x;
          return v;
        }
      }
    }
    return v;
  }
  for (NodeId f = 0; f < l.size(); ++f) {
    for (NodeId p : l.atoms()) {
      if (l.leq(p, f)) continue;
      ++v.checked;
      const NodeId g = l.join(f, p);
      if (auto h = strictly_between(f, g)) {
        v.holds = false;
        v.witness = {f, p, *h};
        return v;
      }
    }
  }
  return v;
}

struct PropSysReport {
  LatticeVerdict complete;
  LatticeVerdict ortholattice;
  LatticeVerdict orthomodular;
  LatticeVerdict atomistic;
  LatticeVerdict atom_covering;
  bool is_propositional_system = false;

  /// Name of the first failing property, or empty.
  std::string first_failure() const {
    if (!complete.holds) return "complete";
    if (!ortholattice.holds) return "ortholattice";
    if (!orthomodular.holds) return "orthomodular";
    if (!atomistic.holds) return "atomistic";
    if (!atom_covering.holds) return "atom_covering";
    return {};
  }
};

/// Complete, orthocomplemented, orthomodular, atomistic and covering. When
/// `m` is null and the lattice came from an orthoset, that orthoset is used
/// for the element form of the covering law.
inline PropSysReport is_propositional_system(const OrthoLattice& l,
                                             const Orthoset* m = nullptr) {
  PropSysReport r;
  r.complete.note = "finite lattice: every subset has a meet and a join";
  r.complete.checked = 1;
  r.ortholattice = check_ortholattice(l);
  r.orthomodular = check_orthomodular(l);
  r.atomistic = check_atomistic(l);
  if (m == nullptr && l.origin() == OrthoLattice::Origin::Orthoset) m = l.source();
  r.atom_covering = check_atom_covering(l, m);
  r.is_propositional_system = r.complete.holds && r.ortholattice.holds && r.orthomodular.holds &&
                              r.atomistic.holds && r.atom_covering.holds;
  return r;
}

}  // namespace orthomatroid
