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

#include "orthomatroid/roundtrip.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "orthomatroid/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace orthomatroid {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Orthoset permuted(const Orthoset& m, const std::vector<ElementId>& perm) {
  std::vector<ElementPair> pairs;
  for (const auto& [a, b] : m.pairs()) pairs.emplace_back(perm[a], perm[b]);
  return Orthoset::create(m.size(), pairs);
}

TEST(OrthosetOfLatticeTest, BooleanGivesTriangle) {
  const Orthoset o = orthoset_of_lattice(build_lattice(discrete(3)));
  EXPECT_EQ(o, fixture::triangle());
  EXPECT_EQ(o.name(0), "{0}");
}

TEST(OrthosetOfLatticeTest, LanternGivesMo2) {
  const Orthoset o = orthoset_of_lattice(build_lattice(mo(2)));
  EXPECT_TRUE(ortho_isomorphic(o, mo(2)).has_value());
}

TEST(OrthosetOfLatticeTest, BenzeneIsRejected) {
  try {
    orthoset_of_lattice(oracle::benzene());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPropositionalSystem);
    EXPECT_NE(std::string(e.what()).find("orthomodular"), std::string::npos);
  }
}

TEST(IsSimpleTest, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(is_simple(mo(n)));
    EXPECT_TRUE(is_simple(discrete(n)));
  }
  EXPECT_FALSE(is_simple(fixture::path3()));
}

TEST(SimplifyTest, PathMergesEndpoints) {
  const Simplification s = simplify(fixture::path3());
  EXPECT_EQ(s.orthoset.size(), 2u);
  EXPECT_EQ(s.orthoset.pairs().size(), 1u);
  EXPECT_EQ(s.quotient_map[0], s.quotient_map[2]);
  EXPECT_NE(s.quotient_map[0], s.quotient_map[1]);
}

TEST(SimplifyTest, SimpleInputIsCopied) {
  for (const Orthoset& m : {mo(3), discrete(4), fixture::q3_mixed()}) {
    const Simplification s = simplify(m);
    OrthoIso q{s.quotient_map};
    EXPECT_TRUE(is_ortho_isomorphism(m, s.orthoset, q));
  }
}

TEST(SimplifyTest, NonOrthomatroidIsRejected) {
  EXPECT_EQ(code_of([] { simplify(fixture::edge_plus_point()); }), ErrorCode::NotOrthomatroid);
}

TEST(OrthoIsoTest, Examples) {
  const Orthoset relabelled = permuted(mo(2), {3, 1, 0, 2});
  const auto iso = ortho_isomorphic(mo(2), relabelled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_ortho_isomorphism(mo(2), relabelled, *iso));
  EXPECT_FALSE(ortho_isomorphic(mo(2), discrete(4)).has_value());
  const auto r = ortho_isomorphism_search(discrete(3), fixture::path3());
  EXPECT_FALSE(r.iso.has_value());
  EXPECT_EQ(r.distinguishing_invariant, "orthogonal pair count 3 vs 2");
}

// Same size, pair count and degrees, but a 6-cycle is not two triangles.
TEST(OrthoIsoTest, RegularGraphsNeedSearch) {
  const Orthoset cycle = Orthoset::create(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const Orthoset triangles =
      Orthoset::create(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(ortho_isomorphic(cycle, triangles).has_value());
}

// Isomorphism is an equivalence on random relabellings.
TEST(OrthoIsoProperty, EquivalenceUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Orthoset a = random_orthoset(n, 0.4, seed);
    std::vector<ElementId> p(n), q(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    const Orthoset b = permuted(a, p);
    const Orthoset c = permuted(b, q);
    const auto ab = ortho_isomorphic(a, b);
    const auto ba = ortho_isomorphic(b, a);
    const auto ac = ortho_isomorphic(a, c);
    ASSERT_TRUE(ortho_isomorphic(a, a) && ab && ba && ac);
    ASSERT_TRUE(is_ortho_isomorphism(a, b, *ab));
    ASSERT_TRUE(is_ortho_isomorphism(b, a, *ba));
    ASSERT_TRUE(is_ortho_isomorphism(a, c, *ac));
  }
}

TEST(LatticeIsoTest, RoundTripOnLantern) {
  const OrthoLattice s = build_lattice(mo(3));
  const OrthoLattice back = build_lattice(orthoset_of_lattice(s));
  const auto iso = lattice_isomorphic(back, s);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_lattice_isomorphism(back, s, *iso));
}

TEST(LatticeIsoTest, BooleanVsLanternDifferInHeight) {
  const auto r = lattice_isomorphism_search(build_lattice(discrete(3)), build_lattice(mo(3)));
  EXPECT_FALSE(r.iso.has_value());
  EXPECT_EQ(r.distinguishing_invariant, "height 3 vs 2");
}

TEST(LatticeIsoTest, SelfIsIdentity) {
  const OrthoLattice l = oracle::benzene();
  const auto iso = lattice_isomorphic(l, l);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_lattice_isomorphism(l, l, *iso));
  std::vector<NodeId> id(l.size());
  std::iota(id.begin(), id.end(), 0);
  // O6 also has the chain swap; candidates are tried in ascending order so
  // the identity comes first.
  EXPECT_EQ(iso->mapping, id);
}

TEST(LatticeIsoTest, NonAtomisticLatticesUseNodeSearch) {
  const std::vector<std::pair<NodeId, NodeId>> chain{{0, 1}, {1, 2}, {2, 3}};
  const std::vector<std::pair<NodeId, NodeId>> shuffled{{2, 3}, {3, 0}, {0, 1}};
  const OrthoLattice a = OrthoLattice::from_order({"0", "p", "q", "1"}, chain, {3, 2, 1, 0});
  const OrthoLattice b = OrthoLattice::from_order({"q", "1", "0", "p"}, shuffled, {3, 2, 1, 0});
  const auto iso = lattice_isomorphic(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->mapping, (std::vector<NodeId>{2, 3, 0, 1}));
  EXPECT_TRUE(is_lattice_isomorphism(a, b, *iso));
}

}  // namespace
}  // namespace orthomatroid
