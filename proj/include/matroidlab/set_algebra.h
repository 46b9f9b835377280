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

// Ground sets, set families and the family operators used throughout the
// library: downward closure (Low), inclusion-maximal members (Max) and
// complementation (Com), plus covering/partition predicates.

#ifndef MATROIDLAB_SET_ALGEBRA_H_
#define MATROIDLAB_SET_ALGEBRA_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/error.h"
#include "matroidlab/subset.h"

namespace matroidlab {

// A finite, nonempty, ordered list of distinct element labels. Element i of
// every Subset over this ground set is labels()[i]. Copies share storage.
class GroundSet {
 public:
  // Throws MatroidError(kInvalidGroundSet) on an empty list, duplicate
  // labels, or more than kMaxGroundSize labels.
  explicit GroundSet(std::vector<std::string> labels);

  // Ground set labelled "1", "2", ..., "n".
  static GroundSet Numbered(int n);

  int size() const { return static_cast<int>(labels_->size()); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(int index) const { return (*labels_)[index]; }
  std::optional<int> IndexOf(std::string_view label) const;

  Subset All() const { return Subset::FirstN(size()); }
  bool Contains(Subset s) const { return s.IsSubsetOf(All()); }

  // Subset from labels; throws MatroidError(kElementOutOfRange) on an
  // unknown label.
  Subset SubsetOf(std::initializer_list<std::string_view> labels) const;
  Subset SubsetOf(const std::vector<std::string>& labels) const;

  // "{1,2}" using element labels in index order.
  std::string Format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A duplicate-free family of subsets of one ground set, kept in canonical
// order so equal families compare and serialize identically.
class SetFamily {
 public:
  // Sorts and deduplicates `sets`. Throws MatroidError(kElementOutOfRange)
  // if a member reaches outside the ground set.
  SetFamily(GroundSet ground, std::vector<Subset> sets);
  explicit SetFamily(GroundSet ground) : ground_(std::move(ground)) {}

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(Subset s) const;
  // Position of `s` in canonical order, if present.
  std::optional<std::size_t> IndexOf(Subset s) const;

  // Union of all members; empty for the empty family.
  Subset Union() const;
  // Intersection of all members; the whole ground set for the empty family.
  Subset Intersection() const;

  // True iff every member of this family is a member of `other`.
  bool IsSubfamilyOf(const SetFamily& other) const;

  // "{{1},{2,3}}".
  std::string ToString() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.sets_ == b.sets_ && a.ground_ == b.ground_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> sets_;
};

// { X ⊆ E : X ⊆ A for some A in fam }.
SetFamily Low(const SetFamily& fam);
// Inclusion-maximal members of fam.
SetFamily Max(const SetFamily& fam);
// { E - A : A in fam }.
SetFamily Com(const SetFamily& fam);

// ∅ ∉ fam and the union of fam equals `support`. An empty family covers an
// empty support.
bool IsCovering(const SetFamily& fam, Subset support);
// A covering whose blocks are pairwise disjoint.
bool IsPartition(const SetFamily& fam, Subset support);

// A validated partition of its support (the union of its blocks).
class Partition {
 public:
  // Throws MatroidError(kInvalidPartition) if a block is empty or two
  // blocks overlap.
  explicit Partition(SetFamily blocks);
  // Additionally requires the blocks to cover exactly `support`.
  Partition(SetFamily blocks, Subset support);

  const SetFamily& blocks() const { return blocks_; }
  const GroundSet& ground() const { return blocks_.ground(); }
  Subset support() const { return support_; }
  std::size_t size() const { return blocks_.size(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  SetFamily blocks_;
  Subset support_;
};

// Product of the block sizes; 1 for the partition with no blocks.
uint64_t CombinationNumber(const Partition& p);

// Every set that meets each block in exactly one element. {∅} when the
// partition has no blocks.
SetFamily Transversals(const Partition& p);

// Every partition of `support` (Bell-number many), in a fixed order.
std::vector<Partition> AllPartitions(const GroundSet& ground, Subset support);

}  // namespace matroidlab

#endif  // MATROIDLAB_SET_ALGEBRA_H_
