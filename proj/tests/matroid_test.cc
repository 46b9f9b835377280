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

#include "matroidlab/matroid.h"

#include <gtest/gtest.h>

#include "matroidlab/enumeration.h"
#include "oracles.h"

namespace matroidlab {
namespace {

using testing::Labels;
using testing::MakeMatroid;

SetFamily Fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> members;
  for (auto s : sets) members.push_back(Labels(s));
  return SetFamily(GroundSet::Numbered(n), std::move(members));
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const MatroidError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MatroidError";
  return ErrorCode::kInvalidGroundSet;
}

TEST(FromBasesTest, AcceptsValidFamilies) {
  const Matroid m = MakeMatroid(3, {{1, 2}, {1, 3}});
  EXPECT_EQ(m.rank(), 2);
  const Matroid big =
      MakeMatroid(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 5}, {1, 4, 5}});
  EXPECT_EQ(big.rank(), 3);
  EXPECT_EQ(MakeMatroid(1, {{}}).rank(), 0);
}

TEST(FromBasesTest, ReportsViolationsInOrder) {
  EXPECT_EQ(
      CodeOf([] { Matroid::FromBases(SetFamily(GroundSet::Numbered(2))); }),
      ErrorCode::kEmptyFamily);
  try {
    Matroid::FromBases(Fam(3, {{1, 2}, {3}}));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnequalCardinality);
    ASSERT_EQ(e.witness_sets().size(), 2u);
    EXPECT_EQ(e.witness_sets()[0], Labels({3}));
    EXPECT_EQ(e.witness_sets()[1], Labels({1, 2}));
  }
  // {1,2} and {3,4}: removing 1 from {1,2} needs {2,3} or {2,4}.
  try {
    Matroid::FromBases(Fam(4, {{1, 2}, {3, 4}}));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExchangeFailure);
    ASSERT_EQ(e.witness_sets().size(), 2u);
    EXPECT_EQ(e.witness_sets()[0], Labels({1, 2}));
    EXPECT_EQ(e.witness_sets()[1], Labels({3, 4}));
    EXPECT_EQ(e.witness_elements(), std::vector<int>{0});
  }
}

TEST(FromIndependentsTest, AxiomsAndAgreementWithBases) {
  const Matroid m = Matroid::FromIndependents(Low(Fam(3, {{1, 2}, {1, 3}})));
  EXPECT_EQ(m.bases(), Fam(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(Matroid::FromIndependents(Fam(1, {{}})).rank(), 0);
  EXPECT_EQ(Matroid::FromIndependents(Fam(2, {{}, {1}, {2}})).bases(),
            Fam(2, {{1}, {2}}));
  EXPECT_EQ(CodeOf([] { Matroid::FromIndependents(Fam(2, {{1}})); }),
            ErrorCode::kMissingEmptySet);
  EXPECT_EQ(CodeOf([] { Matroid::FromIndependents(Fam(2, {{}, {1, 2}})); }),
            ErrorCode::kNotDownwardClosed);
  EXPECT_EQ(CodeOf([] {
              Matroid::FromIndependents(Fam(3, {{}, {1}, {2}, {3}, {1, 2}}));
            }),
            ErrorCode::kAugmentationFailure);
}

TEST(FromIndependentsTest, RoundTripOverPopulation) {
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : EnumerateMatroids(n)) {
      EXPECT_EQ(Matroid::FromIndependents(m.Independents()), m);
      EXPECT_EQ(Matroid::FromBases(Max(m.Independents())), m);
    }
  }
}

TEST(RankTest, IndependenceAndRank) {
  const Matroid m = MakeMatroid(3, {{1, 2}, {1, 3}});
  EXPECT_TRUE(m.IsIndependent(Labels({3})));
  EXPECT_FALSE(m.IsIndependent(Labels({2, 3})));
  EXPECT_TRUE(m.IsIndependent(Subset()));
  EXPECT_EQ(m.RankOf(Labels({2, 3})), 1);
  EXPECT_EQ(m.RankOf(Subset()), 0);
  EXPECT_EQ(m.RankOf(m.ground().All()), 2);
}

TEST(RankTest, MonotoneUnitIncrementOverPopulation) {
  for (const Matroid& m : EnumerateMatroids(5)) {
    ForEachSubsetOf(m.ground().All(), [&](Subset x) {
      for (int a = 0; a < 5; ++a) {
        const int grown = m.RankOf(x.With(a));
        EXPECT_GE(grown, m.RankOf(x));
        EXPECT_LE(grown, m.RankOf(x) + 1);
      }
    });
  }
}

TEST(DualTest, ComplementsAndInvolution) {
  const Matroid m = MakeMatroid(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(m.Dual().bases(), Fam(4, {{3, 4}, {2, 4}, {2, 3}}));
  const Matroid zero = MakeMatroid(3, {{}});
  EXPECT_EQ(zero.Dual().rank(), 3);
  EXPECT_EQ(zero.Dual().bases(), Fam(3, {{1, 2, 3}}));
  for (const Matroid& x : EnumerateMatroids(4)) {
    EXPECT_EQ(x.Dual().Dual(), x);
    EXPECT_EQ(x.rank() + x.Dual().rank(), 4);
  }
}

TEST(PartitionMatroidTest, CapsSelectBlockCounts) {
  const GroundSet g = GroundSet::Numbered(5);
  const Partition p(Fam(5, {{1, 2}, {3, 4, 5}}));
  const Matroid m = MakePartitionMatroid(g, {p, {1, 2}});
  EXPECT_EQ(m.bases().size(), 6u);
  for (Subset b : m.bases()) {
    EXPECT_EQ((b & Labels({1, 2})).size(), 1);
    EXPECT_EQ((b & Labels({3, 4, 5})).size(), 2);
  }
  EXPECT_EQ(MakePartitionMatroid(g, {p, {0, 0}}).rank(), 0);
  EXPECT_EQ(MakePartitionMatroid(g, {p, {2, 3}}).bases(),
            Fam(5, {{1, 2, 3, 4, 5}}));
}

TEST(PartitionMatroidTest, RejectsBadCaps) {
  const GroundSet g = GroundSet::Numbered(3);
  const Partition p(Fam(3, {{1}, {2, 3}}));
  EXPECT_EQ(CodeOf([&] { MakePartitionMatroid(g, {p, {2, 1}}); }),
            ErrorCode::kCapOutOfRange);
  EXPECT_EQ(CodeOf([&] { MakePartitionMatroid(g, {p, {-1, 1}}); }),
            ErrorCode::kCapOutOfRange);
  EXPECT_EQ(CodeOf([&] { MakePartitionMatroid(g, {p, {1}}); }),
            ErrorCode::kCapOutOfRange);
  EXPECT_EQ(CodeOf([&] {
              MakePartitionMatroid(GroundSet::Numbered(4), {p, {1, 1}});
            }),
            ErrorCode::kGroundMismatch);
}

TEST(UniquePartitionMatroidTest, Examples) {
  EXPECT_EQ(MakeUniquePartitionMatroid(GroundSet::Numbered(3),
                                       Partition(Fam(3, {{1}, {2, 3}})))
                .bases(),
            Fam(3, {{1, 2}, {1, 3}}));
  const Matroid one_block = MakeUniquePartitionMatroid(
      GroundSet::Numbered(4), Partition(Fam(4, {{2, 3, 4}})));
  EXPECT_EQ(one_block.bases(), Fam(4, {{2}, {3}, {4}}));
  EXPECT_FALSE(one_block.BaseUnion().contains(0));
  EXPECT_EQ(MakeUniquePartitionMatroid(GroundSet::Numbered(3),
                                       Partition(Fam(3, {{1}, {2}, {3}})))
                .bases(),
            Fam(3, {{1, 2, 3}}));
}

TEST(IsomorphismTest, Examples) {
  const Matroid a = MakeMatroid(5, {{1, 2}, {1, 3}, {1, 4}});
  const Matroid b = MakeMatroid(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_FALSE(AreIsomorphic(a, b));
  EXPECT_TRUE(AreIsomorphic(a, a));
  EXPECT_TRUE(
      AreIsomorphic(MakeMatroid(4, {{1, 2}}), MakeMatroid(4, {{3, 4}})));
}

TEST(IsomorphismTest, CanonicalCodeAgreesWithSearch) {
  const std::vector<Matroid> all = EnumerateMatroids(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      EXPECT_EQ(AreIsomorphic(all[i], all[j]),
                CanonicalCode(all[i]) == CanonicalCode(all[j]))
          << all[i].bases().ToString() << " " << all[j].bases().ToString();
    }
  }
}

}  // namespace
}  // namespace matroidlab
