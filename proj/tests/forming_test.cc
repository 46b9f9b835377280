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

#include "matroidlab/forming.h"

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

TEST(SecondaryBasesTest, Examples) {
  EXPECT_EQ(SecondaryBases(MakeMatroid(3, {{1, 2}, {1, 3}})),
            Fam(3, {{1}, {2}, {3}}));
  EXPECT_EQ(SecondaryBases(MakeMatroid(2, {{1}, {2}})), Fam(2, {{}}));
  try {
    SecondaryBases(MakeMatroid(2, {{}}));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankZero);
  }
}

TEST(ExpansionSetTest, Examples) {
  const Matroid m = MakeMatroid(3, {{1, 2}, {1, 3}});
  EXPECT_EQ(ExpansionSet(m, Labels({1})), Labels({2, 3}));
  EXPECT_EQ(ExpansionSet(m, Labels({2})), Labels({1}));
  EXPECT_EQ(ExpansionSet(m, Labels({1, 2})), Subset());
}

TEST(ExpansionSetTest, MatchesRankOracleOnEverySubset) {
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : EnumerateMatroids(n)) {
      const testing::IntFamily bases = testing::ToIntFamily(m.bases());
      ForEachSubsetOf(m.ground().All(), [&](Subset x) {
        const Subset k = ExpansionSet(m, x);
        EXPECT_EQ(testing::ToIntSet(k),
                  testing::ExpansionOracle(bases, n, testing::ToIntSet(x)));
        EXPECT_FALSE(k.Intersects(x));
      });
    }
  }
}

TEST(FormingFamilyTest, Examples) {
  const Matroid m1 = MakeMatroid(3, {{1, 2}, {1, 3}});
  const FormingFamily f1 = FormingBaseFamily(m1);
  EXPECT_EQ(f1.family, Fam(3, {{1}, {2, 3}}));
  EXPECT_EQ(f1.source, FormingSource::kGlobal);
  EXPECT_FALSE(f1.base.has_value());

  const Matroid u23 = MakeMatroid(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(FormingBaseFamily(u23).family, Fam(3, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST(FormingFamilyTest, RelativeToBase) {
  const Matroid m1 = MakeMatroid(3, {{1, 2}, {1, 3}});
  const FormingFamily f = FormingBaseFamilyAt(m1, Labels({1, 2}));
  EXPECT_EQ(f.family, Fam(3, {{1}, {2, 3}}));
  EXPECT_EQ(f.source, FormingSource::kRelativeToBase);
  EXPECT_EQ(f.base, Labels({1, 2}));

  EXPECT_EQ(FormingBaseFamilyAt(MakeMatroid(2, {{1}, {2}}), Labels({1})).family,
            Fam(2, {{1, 2}}));
  const Matroid u23 = MakeMatroid(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(FormingBaseFamilyAt(u23, Labels({1, 2})).family,
            Fam(3, {{2, 3}, {1, 3}}));
  try {
    FormingBaseFamilyAt(u23, Labels({1}));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABase);
  }
}

TEST(FormingFamilyTest, StructuralPropertiesOverPopulation) {
  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : EnumerateMatroids(n)) {
      if (m.rank() == 0) continue;
      const SetFamily global = FormingBaseFamily(m).family;
      EXPECT_EQ(global.Union(), m.BaseUnion());
      EXPECT_GE(static_cast<int>(global.size()), m.rank());
      for (Subset block : global) EXPECT_FALSE(block.empty());
      for (Subset b : m.bases()) {
        const SetFamily local = FormingBaseFamilyAt(m, b).family;
        EXPECT_TRUE(local.IsSubfamilyOf(global));
        EXPECT_EQ(static_cast<int>(local.size()), m.rank());
        EXPECT_EQ(local.Union(), m.BaseUnion());
      }
    }
  }
}

}  // namespace
}  // namespace matroidlab
