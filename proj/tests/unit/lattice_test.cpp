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

#include "orthomatroid/lattice.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "orthomatroid/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace orthomatroid {
namespace {

NodeId node(const OrthoLattice& l, const SubsetMask& s) {
  const auto id = l.find(s);
  EXPECT_TRUE(id.has_value()) << s;
  return id.value_or(0);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(ClosedSetsTest, Path) {
  const auto sets = closed_sets(fixture::path3());
  ASSERT_EQ(sets.size(), 4u);
  EXPECT_EQ(sets[0].mask(), SubsetMask(3));
  EXPECT_EQ(sets[1].mask(), SubsetMask(3, {1}));
  EXPECT_EQ(sets[2].mask(), SubsetMask(3, {0, 2}));
  EXPECT_EQ(sets[3].mask(), SubsetMask::full(3));
}

TEST(ClosedSetsTest, Mo2HasSixAndTriangleHasEight) {
  const auto mo2 = closed_sets(mo(2));
  ASSERT_EQ(mo2.size(), 6u);
  for (ElementId x = 0; x < 4; ++x) EXPECT_EQ(mo2[x + 1].mask(), SubsetMask(4, {x}));
  EXPECT_EQ(closed_sets(fixture::triangle()).size(), 8u);
}

TEST(ClosedSetsTest, BudgetRaisesResourceLimit) {
  EXPECT_EQ(code_of([] { closed_sets(discrete(8), 100); }), ErrorCode::ResourceLimit);
}

TEST(ClosedSetsProperty, MatchOracleInCanonicalOrder) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 10;
    const Orthoset m = random_orthoset(n, 0.1 + 0.02 * static_cast<double>(seed), seed);
    const auto sets = closed_sets(m);
    std::set<std::uint64_t> got;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      got.insert(sets[i].mask().low_word());
      if (i > 0) {
        ASSERT_TRUE(canonical_less(sets[i - 1].mask(), sets[i].mask()));
      }
    }
    ASSERT_EQ(got, oracle::closed_sets(m));
  }
}

TEST(BuildLatticeTest, TriangleIsBooleanWithSetComplement) {
  const Orthoset t = fixture::triangle();
  const OrthoLattice l = build_lattice(t);
  EXPECT_EQ(l.size(), 8u);
  EXPECT_EQ(l.height(), 3u);
  EXPECT_EQ(l.atoms().size(), 3u);
  for (NodeId i = 0; i < l.size(); ++i) {
    EXPECT_EQ(l.closed_set(l.ortho(i)), ~l.closed_set(i));
  }
  EXPECT_EQ(l.hasse_edges().size(), 12u);
}

TEST(BuildLatticeTest, Mo2IsTheLantern) {
  const OrthoLattice l = build_lattice(mo(2));
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.height(), 2u);
  EXPECT_EQ(l.atoms().size(), 4u);
  EXPECT_EQ(l.hasse_edges().size(), 8u);
  EXPECT_EQ(l.ortho(node(l, SubsetMask(4, {0}))), node(l, SubsetMask(4, {1})));
}

TEST(BuildLatticeTest, PathIsFourElementBoolean) {
  const OrthoLattice l = build_lattice(fixture::path3());
  EXPECT_EQ(l.size(), 4u);
  EXPECT_EQ(l.height(), 2u);
  const NodeId b = node(l, SubsetMask(3, {1}));
  const NodeId ac = node(l, SubsetMask(3, {0, 2}));
  EXPECT_EQ(l.ortho(b), ac);
  EXPECT_EQ(l.ortho(ac), b);
  EXPECT_EQ(l.name(ac), "{a,c}");
}

TEST(OrthomodularTest, HoldsForOrthomatroids) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Orthoset& m : enumerate_orthomatroids(n)) {
      EXPECT_TRUE(check_orthomodular(build_lattice(m)).holds);
    }
  }
}

TEST(OrthomodularTest, BenzeneFailsAtAB) {
  const OrthoLattice o6 = oracle::benzene();
  const LatticeVerdict v = check_orthomodular(o6);
  ASSERT_FALSE(v.holds);
  ASSERT_EQ(v.witness, (std::vector<NodeId>{1, 2}));
  // a ≤ b but b ∧ (a ∨ b^⊥) = b ∧ 1 = b ≠ a.
  const NodeId a = 1, b = 2;
  EXPECT_TRUE(o6.leq(a, b));
  EXPECT_NE(o6.meet(b, o6.join(a, o6.ortho(b))), a);
}

TEST(OrthomodularTest, BooleanHolds) {
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(check_orthomodular(build_lattice(discrete(n))).holds);
}

TEST(AtomCoveringTest, LanternAndDiscrete) {
  EXPECT_TRUE(check_atom_covering(build_lattice(mo(3))).holds);
  for (std::size_t n = 0; n <= 5; ++n) {
    const Orthoset d = discrete(n);
    const OrthoLattice l = build_lattice(d);
    EXPECT_TRUE(check_atom_covering(l, &d).holds);
    EXPECT_TRUE(check_atom_covering(l).holds);
  }
}

TEST(AtomCoveringTest, EdgePlusPointFixture) {
  const Orthoset m = fixture::edge_plus_point();
  const OrthoLattice l = build_lattice(m);
  const LatticeVerdict v = check_atom_covering(l, &m);
  ASSERT_FALSE(v.holds);
  ASSERT_EQ(v.witness.size(), 3u);
  EXPECT_EQ(l.closed_set(v.witness[0]), SubsetMask(3));
  EXPECT_EQ(l.closed_set(v.witness[1]), SubsetMask::full(3));
  EXPECT_EQ(l.closed_set(v.witness[2]), SubsetMask(3, {0}));
  EXPECT_EQ(v.element, std::optional<ElementId>(2));
}

TEST(AtomCoveringTest, RejectsForeignOrthoset) {
  const Orthoset other = mo(3);
  EXPECT_EQ(code_of([&] { check_atom_covering(build_lattice(mo(2)), &other); }),
            ErrorCode::InvalidArgument);
}

TEST(AtomisticTest, Examples) {
  // O6 is not atomistic: its atoms are a and b', and b lies above a alone.
  const LatticeVerdict o6 = check_atomistic(oracle::benzene());
  EXPECT_FALSE(o6.holds);
  EXPECT_EQ(o6.witness, std::vector<NodeId>{2});
  EXPECT_TRUE(check_atomistic(build_lattice(discrete(0))).holds);
  EXPECT_TRUE(check_atomistic(build_lattice(mo(2))).holds);
  // A four-element chain is not atomistic.
  std::vector<std::pair<NodeId, NodeId>> chain{{0, 1}, {1, 2}, {2, 3}};
  const OrthoLattice c = OrthoLattice::from_order({"0", "p", "q", "1"}, chain, {3, 2, 1, 0});
  const LatticeVerdict v = check_atomistic(c);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, std::vector<NodeId>{2});
}

TEST(PropositionalSystemTest, Examples) {
  EXPECT_TRUE(is_propositional_system(build_lattice(mo(4))).is_propositional_system);
  EXPECT_TRUE(is_propositional_system(build_lattice(discrete(3))).is_propositional_system);
  const PropSysReport o6 = is_propositional_system(oracle::benzene());
  EXPECT_FALSE(o6.is_propositional_system);
  EXPECT_EQ(o6.first_failure(), "orthomodular");
  const PropSysReport e = is_propositional_system(build_lattice(fixture::edge_plus_point()));
  EXPECT_FALSE(e.is_propositional_system);
  EXPECT_EQ(e.first_failure(), "atom_covering");
}

TEST(AtomsBelowTest, Examples) {
  const OrthoLattice l = build_lattice(mo(2));
  EXPECT_TRUE(atoms_below(l, l.bottom()).empty());
  EXPECT_EQ(atoms_below(l, l.top()).size(), 4u);
  const OrthoLattice p = build_lattice(fixture::path3());
  const NodeId ac = node(p, SubsetMask(3, {0, 2}));
  EXPECT_EQ(atoms_below(p, ac), std::vector<NodeId>{ac});
}

TEST(FromOrderTest, MalformedInputs) {
  const std::vector<std::pair<NodeId, NodeId>> cycle{{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { OrthoLattice::from_order({"x", "y"}, cycle, {1, 0}); }),
            ErrorCode::MalformedLattice);
  // Two incomparable maximal elements: no join.
  const std::vector<std::pair<NodeId, NodeId>> vee{{0, 1}, {0, 2}};
  EXPECT_EQ(code_of([&] { OrthoLattice::from_order({"0", "p", "q"}, vee, {0, 1, 2}); }),
            ErrorCode::MalformedLattice);
  EXPECT_EQ(code_of([&] { OrthoLattice::from_order({"0"}, {}, {}); }),
            ErrorCode::MalformedLattice);
}

// Lattice laws, De Morgan and join = closure of union on random orthosets.
TEST(LatticeProperty, OperationsMatchDefinitions) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Orthoset m = random_orthoset(n, 0.25 + 0.02 * static_cast<double>(seed), seed);
    const OrthoLattice l = build_lattice(m);
    ASSERT_TRUE(check_ortholattice(l).holds);
    for (NodeId p = 0; p < l.size(); ++p) {
      for (NodeId q = 0; q < l.size(); ++q) {
        const auto up = l.closed_set(p) | l.closed_set(q);
        const std::uint64_t expected =
            oracle::to_bits(oracle::closure(m, oracle::to_set(n, up.low_word())));
        ASSERT_EQ(l.closed_set(l.join(p, q)).low_word(), expected);
        ASSERT_EQ(l.closed_set(l.meet(p, q)), l.closed_set(p) & l.closed_set(q));
        ASSERT_EQ(l.ortho(l.join(p, q)), l.meet(l.ortho(p), l.ortho(q)));
        ASSERT_EQ(l.ortho(l.meet(p, q)), l.join(l.ortho(p), l.ortho(q)));
      }
    }
  }
}

// Every Hasse edge is a cover: nothing lies strictly between its ends, and
// every strict relation is a chain of edges.
TEST(LatticeProperty, HasseDiagramIsIrredundant) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Orthoset m = random_orthoset(7, 0.4, seed);
    const OrthoLattice l = build_lattice(m);
    std::vector<std::vector<bool>> reach(l.size(), std::vector<bool>(l.size(), false));
    for (const auto& [a, b] : l.hasse_edges()) {
      ASSERT_TRUE(l.leq(a, b) && a != b);
      for (NodeId h = 0; h < l.size(); ++h) {
        ASSERT_FALSE(h != a && h != b && l.leq(a, h) && l.leq(h, b));
      }
      reach[a][b] = true;
    }
    for (NodeId k = 0; k < l.size(); ++k) {
      for (NodeId i = 0; i < l.size(); ++i) {
        for (NodeId j = 0; j < l.size(); ++j) {
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        }
      }
    }
    for (NodeId i = 0; i < l.size(); ++i) {
      for (NodeId j = 0; j < l.size(); ++j) {
        ASSERT_EQ(reach[i][j], i != j && l.leq(i, j));
      }
    }
  }
}

}  // namespace
}  // namespace orthomatroid
