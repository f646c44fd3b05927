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

#include "orthomatroid/laws.hpp"

#include <cstdint>

#include "gtest/gtest.h"
#include "orthomatroid/generators.hpp"
#include "support/instances.hpp"

namespace orthomatroid {
namespace {

std::vector<LawReport> everything(const Orthoset& m, const LawCheckOptions& options = {}) {
  std::vector<LawReport> out = check_relation_laws(m);
  for (auto& r : check_galois(m, options)) out.push_back(r);
  for (auto& r : check_closure_laws(m, options)) out.push_back(r);
  return out;
}

TEST(LawsTest, ReportOrderAndNames) {
  const auto reports = everything(mo(2));
  ASSERT_EQ(reports.size(), 7u);
  const Law order[] = {Law::Symmetry,     Law::AntiReflexivity, Law::GaloisDisjoint,
                       Law::GaloisAdjunction, Law::Extensivity,  Law::Monotony,
                       Law::Idempotence};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(reports[i].law, order[i]);
  EXPECT_EQ(to_string(Law::GaloisAdjunction), "galois_adjunction");
}

TEST(LawsTest, TriangleAndMo2Hold) {
  for (const Orthoset& m : {fixture::triangle(), mo(2)}) {
    for (const auto& r : everything(m)) {
      EXPECT_TRUE(r.holds) << to_string(r.law);
      EXPECT_TRUE(r.exhaustive);
      EXPECT_FALSE(r.witness.has_value());
    }
  }
}

TEST(LawsTest, PathClosureLawsAreExhaustiveOverEightSubsets) {
  const auto reports = check_closure_laws(fixture::path3());
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_TRUE(all_hold(reports));
  EXPECT_EQ(reports[0].checked_count, 8u);   // extensivity: 2^3
  EXPECT_EQ(reports[1].checked_count, 27u);  // monotony: 3^3 nested pairs
  EXPECT_EQ(reports[2].checked_count, 8u);   // idempotence
}

TEST(LawsTest, SampledModeOnHundredElements) {
  const Orthoset m = random_orthoset(100, 0.2, 99);
  LawCheckOptions options;
  options.sample_size = 500;
  for (const auto& r : check_galois(m, options)) {
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.checked_count, 500u);
  }
  for (const auto& r : check_closure_laws(m, options)) {
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.checked_count, 500u);
  }
}

TEST(LawsTest, TenElementsAreExhaustiveUnderDefaultLimit) {
  const Orthoset m = random_orthoset(10, 0.3, 5);
  const auto galois = check_galois(m);
  EXPECT_EQ(galois[0].checked_count, 1024u);
  EXPECT_EQ(galois[1].checked_count, 1048576u);
  const auto closure = check_closure_laws(m);
  EXPECT_EQ(closure[1].checked_count, 59049u);
  for (const auto& r : galois) EXPECT_TRUE(r.holds && r.exhaustive);
  for (const auto& r : closure) EXPECT_TRUE(r.holds && r.exhaustive);
}

TEST(LawsTest, LimitSwitchesEachLawSeparately) {
  LawCheckOptions options;
  options.exhaustive_limit = 1000;  // 2^8 fits, 3^8 and 4^8 do not
  options.sample_size = 64;
  const auto closure = check_closure_laws(random_orthoset(8, 0.4, 1), options);
  EXPECT_TRUE(closure[0].exhaustive);
  EXPECT_FALSE(closure[1].exhaustive);
  EXPECT_EQ(closure[1].checked_count, 64u);
  EXPECT_TRUE(closure[2].exhaustive);
}

TEST(LawsTest, EmptyOrthosetIdempotenceOnEmptySet) {
  const auto reports = everything(discrete(0));
  EXPECT_TRUE(all_hold(reports));
  EXPECT_EQ(reports[6].checked_count, 1u);
}

TEST(LawsTest, SeedMakesSamplingReproducible) {
  const Orthoset m = random_orthoset(40, 0.5, 3);
  LawCheckOptions options;
  options.sample_size = 32;
  options.seed = 11;
  const auto a = check_closure_laws(m, options);
  const auto b = check_closure_laws(m, options);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].checked_count, b[i].checked_count);
}

}  // namespace
}  // namespace orthomatroid
