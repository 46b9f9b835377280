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

// Decision procedures for matroid classes defined through the base family.
//
// Every negative verdict carries the canonically least counterexample, so
// output is identical for any thread count. Witnesses can be replayed with
// WitnessConfirms.

#ifndef MATROIDLAB_CLASSIFIERS_H_
#define MATROIDLAB_CLASSIFIERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroidlab/matroid.h"

namespace matroidlab {

inline constexpr std::size_t kDefaultSearchCap = 20;

struct ClassifierOptions {
  // 0 = OpenMP default, 1 = serial.
  int threads = 0;
  // Largest base family the minimality searches will attempt (at most 63).
  std::size_t search_cap = kDefaultSearchCap;
};

// A secondary base A and a base B with two distinct e1, e2 in B such that
// A + e1 and A + e2 are both bases.
struct ExpansionWitness {
  Subset secondary;
  Subset base;
  int first;
  int second;
  friend bool operator==(const ExpansionWitness&,
                         const ExpansionWitness&) = default;
};

// Bases B1, B2, x in B1 - B2 and distinct y1, y2 in B2 - B1 such that
// (B1 - x) + y1 and (B1 - x) + y2 are both bases.
struct ExchangeWitness {
  Subset from;
  Subset to;
  int removed;
  int first;
  int second;
  friend bool operator==(const ExchangeWitness&,
                         const ExchangeWitness&) = default;
};

enum class Preserved { kUnion, kIntersection };

// A proper nonempty subfamily of the bases that is itself a base family and
// keeps the union (or intersection) of all bases.
struct SubfamilyWitness {
  SetFamily subfamily;
  Preserved preserved;
  friend bool operator==(const SubfamilyWitness&,
                         const SubfamilyWitness&) = default;
};

using Witness =
    std::variant<ExpansionWitness, ExchangeWitness, SubfamilyWitness>;

struct ClassificationResult {
  bool verdict = true;
  // Present exactly when verdict is false.
  std::optional<Witness> witness;
};

// At most one element of any base extends a secondary base to a base.
// Throws kRankZero: secondary bases only exist for positive rank.
ClassificationResult IsUniqueExpansion(const Matroid& m,
                                       const ClassifierOptions& options = {});

// For all bases B1, B2 and x in B1 - B2, at most one y in B2 - B1 makes
// (B1 - x) + y a base. Vacuously true in rank 0.
ClassificationResult IsUniqueExchange(const Matroid& m,
                                      const ClassifierOptions& options = {});

// No proper nonempty subfamily of the bases is a base family with the same
// union. Throws kSearchCapExceeded above options.search_cap bases.
ClassificationResult IsUnionMinimal(const Matroid& m,
                                    const ClassifierOptions& options = {});

// As IsUnionMinimal, preserving the intersection of the bases.
ClassificationResult IsIntersectionMinimal(
    const Matroid& m, const ClassifierOptions& options = {});

// F(M) as a partition of the base union when it is one. Throws kRankZero.
std::optional<Partition> RecoverPartition(const Matroid& m);

// Every base meets every block of `p` exactly once. `p` must partition the
// base union (kSupportMismatch otherwise). A true verdict is cross-checked
// against the transversal product of `p` and its combination number;
// disagreement throws std::logic_error.
bool IsTransversalOf(const Matroid& m, const Partition& p);

// Replays a witness against the defining condition of its class.
bool WitnessConfirms(const Matroid& m, const Witness& witness);

std::string DescribeWitness(const GroundSet& ground, const Witness& witness);

namespace kernels {

// Base indices of each subfamily examined by the minimality searches, in
// search order: decreasing size, lexicographic on index lists within a
// size. `size` ranges over [1, base_count - 1].
std::vector<uint64_t> SubfamiliesOfSize(std::size_t base_count,
                                        std::size_t size);

// First subfamily mask (in search order) that is a base family preserving
// the union or intersection; serial and OpenMP versions.
std::optional<uint64_t> FindShrinkingSubfamilySerial(const Matroid& m,
                                                     Preserved preserved);
std::optional<uint64_t> FindShrinkingSubfamily(const Matroid& m,
                                               Preserved preserved,
                                               int threads);

}  // namespace kernels

}  // namespace matroidlab

#endif  // MATROIDLAB_CLASSIFIERS_H_
