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

#ifndef MATROIDLAB_MATROID_H_
#define MATROIDLAB_MATROID_H_

#include <cstdint>
#include <vector>

#include "matroidlab/set_algebra.h"

namespace matroidlab {

// A matroid held by its base family. Instances only come out of the
// validating factories below, so every Matroid satisfies the base axioms:
// the family is nonempty, equicardinal, and closed under base exchange.
// Independent sets are derived on demand (Low of the bases).
class Matroid {
 public:
  // Validates nonemptiness, then equal cardinality, then the exchange
  // property, reporting the canonically least violation:
  //   kEmptyFamily
  //   kUnequalCardinality   witness_sets = {first base, mismatching base}
  //   kExchangeFailure      witness_sets = {B1, B2}, witness_elements = {x}
  static Matroid FromBases(SetFamily candidate);

  // Validates the independence axioms and keeps Max(independents):
  //   kMissingEmptySet
  //   kNotDownwardClosed    witness_sets = {I, I'} with I' ⊆ I missing
  //   kAugmentationFailure  witness_sets = {I1, I2}, |I1| < |I2|
  static Matroid FromIndependents(const SetFamily& independents);

  const GroundSet& ground() const { return bases_.ground(); }
  const SetFamily& bases() const { return bases_; }
  int rank() const { return rank_; }

  bool IsBase(Subset x) const { return bases_.contains(x); }
  bool IsIndependent(Subset x) const;
  // Size of a largest independent subset of x: max over bases of |B ∩ x|.
  int RankOf(Subset x) const;
  SetFamily Independents() const { return Low(bases_); }

  Subset BaseUnion() const { return bases_.Union(); }
  Subset BaseIntersection() const { return bases_.Intersection(); }

  // The matroid whose bases are the complements of these bases.
  Matroid Dual() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.bases_ == b.bases_;
  }

 private:
  Matroid(SetFamily bases, int rank) : bases_(std::move(bases)), rank_(rank) {}

  SetFamily bases_;
  int rank_;
};

// Orders matroids by ground size, then rank, then base families compared
// lexicographically in canonical subset order.
bool CanonicalLess(const Matroid& a, const Matroid& b);

// Blocks P_1..P_m and per-block caps k_i for a partition matroid.
struct PartitionMatroidSpec {
  Partition blocks;
  std::vector<int> caps;
};

// The matroid whose independent sets meet each block P_i in at most k_i
// elements. Elements outside the blocks are loops (cap 0). Throws
// kCapOutOfRange when a cap is negative, exceeds its block, or the cap
// count differs from the block count; kGroundMismatch when the blocks live
// on another ground set.
Matroid MakePartitionMatroid(const GroundSet& ground,
                             const PartitionMatroidSpec& spec);

// Unique partition matroid: independent sets pick at most one element from
// each block and nothing outside the blocks.
Matroid MakeUniquePartitionMatroid(const GroundSet& ground, const Partition& p);

// Number of bases containing each element.
std::vector<int> ElementDegrees(const Matroid& m);

// True iff some bijection between the ground sets maps the bases of `a`
// onto the bases of `b`. Brute force, pruned by size, rank, base count and
// element degrees; intended for ground sets of at most ~10 elements.
bool AreIsomorphic(const Matroid& a, const Matroid& b);

// Isomorphism invariant that is complete: two matroids on equally sized
// ground sets share a code iff they are isomorphic. Computed as the least
// relabelled base list over all n! relabellings.
std::vector<uint64_t> CanonicalCode(const Matroid& m);

}  // namespace matroidlab

#endif  // MATROIDLAB_MATROID_H_
