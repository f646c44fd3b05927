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

#include "orthomatroid/orthoset.hpp"

#include <cstdint>
#include <set>
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

TEST(OrthosetTest, TriangleIsCompleteRelation) {
  const Orthoset m = Orthoset::create(3, {{0, 1}, {0, 2}, {1, 2}});
  for (ElementId x = 0; x < 3; ++x) {
    for (ElementId y = 0; y < 3; ++y) EXPECT_EQ(m.orthogonal(x, y), x != y);
  }
}

TEST(OrthosetTest, SelfOrthogonalPairIsRejected) {
  EXPECT_EQ(code_of([] { Orthoset::create(3, {{0, 0}}); }), ErrorCode::SelfOrthogonal);
}

TEST(OrthosetTest, OutOfRangePairIsRejected) {
  EXPECT_EQ(code_of([] { Orthoset::create(3, {{0, 3}}); }), ErrorCode::OutOfRange);
}

TEST(OrthosetTest, LabelCountMustMatch) {
  EXPECT_EQ(code_of([] { Orthoset::create(2, {{0, 1}}, {"a"}); }), ErrorCode::InvalidArgument);
}

TEST(OrthosetTest, PairsAreSymmetrizedAndDeduplicated) {
  const Orthoset m = Orthoset::create(4, {{1, 0}, {0, 1}, {3, 2}});
  EXPECT_EQ(m.pairs(), (std::vector<ElementPair>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(m.orthogonal(1, 0));
  EXPECT_EQ(m, mo(2));
}

TEST(OrthocomplementTest, EmptySetGivesEverything) {
  for (const Orthoset& m : {fixture::path3(), mo(2), discrete(0)}) {
    EXPECT_EQ(orthocomplement(m, m.empty_set()).mask(), m.ground_set());
  }
}

TEST(OrthocomplementTest, GroundSetGivesNothing) {
  for (const Orthoset& m : {fixture::path3(), mo(2), discrete(4)}) {
    EXPECT_TRUE(orthocomplement(m, m.ground_set()).mask().none());
  }
}

TEST(OrthocomplementTest, PathComplementOfEndpoint) {
  const Orthoset m = fixture::path3();
  EXPECT_EQ(orthocomplement(m, SubsetMask(3, {2})).mask(), SubsetMask(3, {1}));
}

TEST(ClosureTest, PathClosureOfEndpoint) {
  const Orthoset m = fixture::path3();
  EXPECT_EQ(closure(m, SubsetMask(3, {2})).mask(), SubsetMask(3, {0, 2}));
  EXPECT_EQ(format_subset(m, closure(m, SubsetMask(3, {2})).mask()), "{a,c}");
}

TEST(ClosureTest, TriangleSingletonIsClosed) {
  EXPECT_EQ(closure(fixture::triangle(), SubsetMask(3, {0})).mask(), SubsetMask(3, {0}));
}

TEST(ClosureTest, EmptySetIsClosed) {
  for (const Orthoset& m : {fixture::path3(), fixture::edge_plus_point(), mo(3)}) {
    EXPECT_TRUE(closure(m, m.empty_set()).mask().none());
  }
}

TEST(ClosureTest, WrongUniverseIsRejected) {
  EXPECT_EQ(code_of([] { closure(mo(2), SubsetMask(3)); }), ErrorCode::OutOfRange);
}

// F^⊥ = (F^⊥⊥)^⊥ for every F, compared against the brute-force oracle.
TEST(OrthocomplementProperty, AgreesWithOracleAndIgnoresClosure) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 4 + seed % 8;
    const Orthoset m = random_orthoset(n, 0.15 + 0.06 * static_cast<double>(seed), seed);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const SubsetMask f = SubsetMask::from_bits(n, bits);
      const SubsetMask fc = orthocomplement(m, f).mask();
      ASSERT_EQ(fc.low_word(), oracle::to_bits(oracle::complement(m, oracle::to_set(n, bits))));
      ASSERT_EQ(orthocomplement(m, closure(m, f).mask()).mask(), fc);
    }
  }
}

// The intersection of closed sets is closed.
TEST(ClosureProperty, ClosedSetsAreClosedUnderIntersection) {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    const std::size_t n = 8;
    const Orthoset m = random_orthoset(n, 0.35, seed);
    const std::set<std::uint64_t> closed = oracle::closed_sets(m);
    for (std::uint64_t a : closed) {
      for (std::uint64_t b : closed) {
        ASSERT_TRUE(is_closed(m, SubsetMask::from_bits(n, a & b)));
      }
    }
  }
}

TEST(RestrictTest, KeepsInducedRelationAndLabels) {
  const Orthoset m = fixture::path3();
  const Restriction r = restrict_to(m, SubsetMask(3, {1, 2}));
  EXPECT_EQ(r.old_ids, (std::vector<ElementId>{1, 2}));
  EXPECT_EQ(r.orthoset.size(), 2u);
  EXPECT_TRUE(r.orthoset.orthogonal(0, 1));
  EXPECT_EQ(r.orthoset.name(0), "b");
}

}  // namespace
}  // namespace orthomatroid
