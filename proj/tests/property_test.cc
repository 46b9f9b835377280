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

// Randomized and exhaustive property checks against the oracles.

#include <gtest/gtest.h>

#include <random>

#include "matroidlab/classifiers.h"
#include "matroidlab/enumeration.h"
#include "matroidlab/forming.h"
#include "oracles.h"

namespace matroidlab {
namespace {

// FromBases accepts a family exactly when the literal axiom test does, and
// a rejection always carries a witness that really violates the axioms.
TEST(PropertyTest, FromBasesAgreesWithAxiomOracle) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const GroundSet g = GroundSet::Numbered(n);
    std::vector<Subset> sets;
    const int count = static_cast<int>(rng() % 6);
    const int size = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < count; ++i) {
      uint64_t bits = rng() & ((uint64_t{1} << n) - 1);
      // Mostly equal sizes so the exchange test is exercised.
      if (rng() % 4 != 0) {
        while (std::popcount(bits) > size) bits &= bits - 1;
        for (int e = 0; std::popcount(bits) < size; ++e)
          bits |= uint64_t{1} << e;
      }
      sets.push_back(Subset(bits));
    }
    const SetFamily family(g, sets);
    const bool valid =
        testing::SatisfiesBaseAxioms(testing::ToIntFamily(family));
    try {
      Matroid::FromBases(family);
      EXPECT_TRUE(valid) << family.ToString();
    } catch (const MatroidError& e) {
      EXPECT_FALSE(valid) << family.ToString();
      if (e.code() == ErrorCode::kExchangeFailure) {
        const Subset b1 = e.witness_sets()[0];
        const Subset b2 = e.witness_sets()[1];
        const int x = e.witness_elements()[0];
        ASSERT_TRUE(family.contains(b1) && family.contains(b2));
        ASSERT_TRUE((b1 - b2).contains(x));
        ForEachElement(b2 - b1, [&](int y) {
          EXPECT_FALSE(family.contains(b1.Without(x).With(y)));
        });
      }
    }
  }
}

TEST(PropertyTest, SymmetricExchangeOnPopulation) {
  for (const Matroid& m : EnumerateMatroids(5)) {
    for (Subset b1 : m.bases()) {
      for (Subset b2 : m.bases()) {
        ForEachElement(b1 - b2, [&](int x) {
          bool found = false;
          ForEachElement(b2 - b1, [&](int y) {
            found = found || m.IsBase(b2.Without(y).With(x));
          });
          EXPECT_TRUE(found);
        });
      }
    }
  }
}

TEST(PropertyTest, UniqueExpansionIffForming) {
  for (const Matroid& m : EnumerateMatroids(5)) {
    if (m.rank() == 0) continue;
    const SetFamily f = FormingBaseFamily(m).family;
    const bool ue = IsUniqueExpansion(m).verdict;
    EXPECT_EQ(IsPartition(f, m.BaseUnion()), ue);
    EXPECT_EQ(static_cast<int>(f.size()) == m.rank(), ue);
    if (ue) {
      EXPECT_EQ(MakeUniquePartitionMatroid(m.ground(), Partition(f)), m);
      EXPECT_TRUE(IsUniqueExchange(m).verdict);
      EXPECT_TRUE(IsUniqueExchange(m.Dual()).verdict);
      EXPECT_TRUE(IsUnionMinimal(m).verdict);
    }
    EXPECT_EQ(IsUnionMinimal(m).verdict,
              IsIntersectionMinimal(m.Dual()).verdict);
  }
}

TEST(PropertyTest, PartitionMatroidIndependenceRule) {
  std::mt19937 rng(11);
  const GroundSet g = GroundSet::Numbered(6);
  for (int trial = 0; trial < 200; ++trial) {
    Subset support(rng() & 0x3f);
    const std::vector<Partition> parts = AllPartitions(g, support);
    const Partition& p = parts[rng() % parts.size()];
    std::vector<int> caps;
    for (Subset b : p.blocks())
      caps.push_back(static_cast<int>(rng() % (b.size() + 1)));
    const Matroid m = MakePartitionMatroid(g, {p, caps});
    ForEachSubsetOf(g.All(), [&](Subset x) {
      bool expected = x.IsSubsetOf(support);
      for (std::size_t i = 0; i < caps.size(); ++i) {
        expected = expected && (x & p.blocks()[i]).size() <= caps[i];
      }
      EXPECT_EQ(m.IsIndependent(x), expected);
    });
  }
}

TEST(PropertyTest, ParallelClassifiersAreThreadCountInvariant) {
  for (const Matroid& m : EnumerateMatroids(5)) {
    const ClassifierOptions serial{.threads = 1};
    for (int threads : {2, 4}) {
      const ClassifierOptions parallel{.threads = threads};
      if (m.rank() > 0) {
        EXPECT_EQ(IsUniqueExpansion(m, serial).witness,
                  IsUniqueExpansion(m, parallel).witness);
      }
      EXPECT_EQ(IsUniqueExchange(m, serial).witness,
                IsUniqueExchange(m, parallel).witness);
      EXPECT_EQ(IsUnionMinimal(m, serial).witness,
                IsUnionMinimal(m, parallel).witness);
    }
  }
}

}  // namespace
}  // namespace matroidlab
