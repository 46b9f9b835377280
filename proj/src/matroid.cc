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

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace matroidlab {

Matroid Matroid::FromBases(SetFamily candidate) {
  if (candidate.empty()) {
    throw MatroidError(ErrorCode::kEmptyFamily, "base family is empty");
  }
  const GroundSet& ground = candidate.ground();
  const Subset first = candidate[0];
  const int rank = first.size();
  for (Subset b : candidate) {
    if (b.size() != rank) {
      throw MatroidError(ErrorCode::kUnequalCardinality,
                         "bases " + ground.Format(first) + " and " +
                             ground.Format(b) + " differ in size",
                         {first, b});
    }
  }
  for (Subset b1 : candidate) {
    for (Subset b2 : candidate) {
      const Subset only_in_b2 = b2 - b1;
      for (int x : (b1 - b2).Elements()) {
        const Subset removed = b1.Without(x);
        bool exchanged = false;
        ForEachElement(only_in_b2, [&](int y) {
          exchanged = exchanged || candidate.contains(removed.With(y));
        });
        if (!exchanged) {
          throw MatroidError(
              ErrorCode::kExchangeFailure,
              "no y in " + ground.Format(only_in_b2) + " makes (" +
                  ground.Format(b1) + " - " + ground.label(x) +
                  ") + y a base (B2 = " + ground.Format(b2) + ")",
              {b1, b2}, {x});
        }
      }
    }
  }
  return Matroid(std::move(candidate), rank);
}

Matroid Matroid::FromIndependents(const SetFamily& independents) {
  const GroundSet& ground = independents.ground();
  if (!independents.contains(Subset())) {
    throw MatroidError(ErrorCode::kMissingEmptySet,
                       "the empty set is not independent");
  }
  for (Subset i : independents) {
    for (int e : i.Elements()) {
      const Subset smaller = i.Without(e);
      if (!independents.contains(smaller)) {
        throw MatroidError(ErrorCode::kNotDownwardClosed,
                           ground.Format(smaller) + " is a subset of " +
                               ground.Format(i) + " but is not independent",
                           {i, smaller});
      }
    }
  }
  for (Subset i1 : independents) {
    for (Subset i2 : independents) {
      if (i1.size() >= i2.size()) continue;
      bool augmented = false;
      ForEachElement(i2 - i1, [&](int e) {
        augmented = augmented || independents.contains(i1.With(e));
      });
      if (!augmented) {
        throw MatroidError(ErrorCode::kAugmentationFailure,
                           ground.Format(i1) + " cannot be augmented from " +
                               ground.Format(i2),
                           {i1, i2});
      }
    }
  }
  return FromBases(Max(independents));
}

bool Matroid::IsIndependent(Subset x) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [x](Subset b) { return x.IsSubsetOf(b); });
}

int Matroid::RankOf(Subset x) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, (b & x).size());
  return best;
}

Matroid Matroid::Dual() const {
  // Complements of a base family always satisfy the base axioms; running
  // the validator anyway keeps the class invariant local to FromBases.
  return FromBases(Com(bases_));
}

bool CanonicalLess(const Matroid& a, const Matroid& b) {
  if (a.ground().size() != b.ground().size()) {
    return a.ground().size() < b.ground().size();
  }
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.bases().begin(), a.bases().end(),
                                      b.bases().begin(), b.bases().end());
}

Matroid MakePartitionMatroid(const GroundSet& ground,
                             const PartitionMatroidSpec& spec) {
  const Partition& p = spec.blocks;
  if (!(p.ground() == ground)) {
    throw MatroidError(ErrorCode::kGroundMismatch,
                       "partition blocks are over a different ground set");
  }
  if (spec.caps.size() != p.size()) {
    throw MatroidError(ErrorCode::kCapOutOfRange,
                       "expected " + std::to_string(p.size()) + " caps, got " +
                           std::to_string(spec.caps.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int cap = spec.caps[i];
    if (cap < 0 || cap > p.blocks()[i].size()) {
      throw MatroidError(ErrorCode::kCapOutOfRange,
                         "cap " + std::to_string(cap) + " for block " +
                             ground.Format(p.blocks()[i]) + " is out of range",
                         {p.blocks()[i]});
    }
  }
  // Bases take exactly k_i elements from block i and nothing elsewhere.
  std::vector<Subset> bases = {Subset()};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Subset block = p.blocks()[i];
    const int cap = spec.caps[i];
    std::vector<Subset> choices;
    ForEachSubsetOf(block, [&](Subset s) {
      if (s.size() == cap) choices.push_back(s);
    });
    std::vector<Subset> next;
    next.reserve(bases.size() * choices.size());
    for (Subset prefix : bases) {
      for (Subset choice : choices) next.push_back(prefix | choice);
    }
    bases = std::move(next);
  }
  return Matroid::FromBases(SetFamily(ground, std::move(bases)));
}

Matroid MakeUniquePartitionMatroid(const GroundSet& ground,
                                   const Partition& p) {
  return MakePartitionMatroid(ground, {p, std::vector<int>(p.size(), 1)});
}

std::vector<int> ElementDegrees(const Matroid& m) {
  std::vector<int> degree(m.ground().size(), 0);
  for (Subset b : m.bases()) {
    ForEachElement(b, [&](int e) { ++degree[e]; });
  }
  return degree;
}

namespace {

struct IsomorphismSearch {
  const Matroid& a;
  const Matroid& b;
  std::vector<int> degree_a;
  std::vector<int> degree_b;
  std::vector<int> image;  // image[i] = element of b that i maps to
  uint64_t used = 0;

  bool Extend(int i) {
    const int n = static_cast<int>(image.size());
    if (i == n) return MapsBasesOnto();
    for (int j = 0; j < n; ++j) {
      if ((used >> j) & 1 || degree_a[i] != degree_b[j]) continue;
      image[i] = j;
      used |= uint64_t{1} << j;
      if (Extend(i + 1)) return true;
      used &= ~(uint64_t{1} << j);
    }
    return false;
  }

  bool MapsBasesOnto() const {
    // Same base count and an injective map: inclusion implies equality.
    for (Subset base : a.bases()) {
      Subset mapped;
      ForEachElement(base, [&](int e) { mapped = mapped.With(image[e]); });
      if (!b.IsBase(mapped)) return false;
    }
    return true;
  }
};

}  // namespace

bool AreIsomorphic(const Matroid& a, const Matroid& b) {
  if (a.ground().size() != b.ground().size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size()) {
    return false;
  }
  IsomorphismSearch search{a, b, ElementDegrees(a), ElementDegrees(b),
                           std::vector<int>(a.ground().size(), -1)};
  std::vector<int> sorted_a = search.degree_a;
  std::vector<int> sorted_b = search.degree_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  return search.Extend(0);
}

std::vector<uint64_t> CanonicalCode(const Matroid& m) {
  const int n = m.ground().size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint64_t> best;
  std::vector<uint64_t> mapped(m.bases().size());
  do {
    for (std::size_t k = 0; k < m.bases().size(); ++k) {
      uint64_t bits = 0;
      ForEachElement(m.bases()[k],
                     [&](int e) { bits |= uint64_t{1} << perm[e]; });
      mapped[k] = bits;
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(),
              {static_cast<uint64_t>(n), static_cast<uint64_t>(m.rank())});
  return best;
}

}  // namespace matroidlab
