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

#include "matroidlab/set_algebra.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace matroidlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGroundSet:
      return "InvalidGroundSet";
    case ErrorCode::kElementOutOfRange:
      return "ElementOutOfRange";
    case ErrorCode::kGroundMismatch:
      return "GroundMismatch";
    case ErrorCode::kInvalidPartition:
      return "InvalidPartition";
    case ErrorCode::kEmptyFamily:
      return "EmptyFamily";
    case ErrorCode::kUnequalCardinality:
      return "UnequalCardinality";
    case ErrorCode::kExchangeFailure:
      return "ExchangeFailure";
    case ErrorCode::kMissingEmptySet:
      return "MissingEmptySet";
    case ErrorCode::kNotDownwardClosed:
      return "NotDownwardClosed";
    case ErrorCode::kAugmentationFailure:
      return "AugmentationFailure";
    case ErrorCode::kCapOutOfRange:
      return "CapOutOfRange";
    case ErrorCode::kRankZero:
      return "RankZero";
    case ErrorCode::kNotABase:
      return "NotABase";
    case ErrorCode::kSearchCapExceeded:
      return "SearchCapExceeded";
    case ErrorCode::kSupportMismatch:
      return "SupportMismatch";
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
  }
  return "Unknown";
}

bool IsAxiomViolation(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyFamily:
    case ErrorCode::kUnequalCardinality:
    case ErrorCode::kExchangeFailure:
    case ErrorCode::kMissingEmptySet:
    case ErrorCode::kNotDownwardClosed:
    case ErrorCode::kAugmentationFailure:
    case ErrorCode::kCapOutOfRange:
    case ErrorCode::kInvalidPartition:
      return true;
    default:
      return false;
  }
}

MatroidError::MatroidError(ErrorCode code, const std::string& message,
                           std::vector<Subset> witness_sets,
                           std::vector<int> witness_elements)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      witness_sets_(std::move(witness_sets)),
      witness_elements_(std::move(witness_elements)) {}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachElement(*this, [&](int i) { out.push_back(i); });
  return out;
}

// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw MatroidError(ErrorCode::kInvalidGroundSet,
                       "ground set must be nonempty");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw MatroidError(ErrorCode::kInvalidGroundSet,
                       "ground set has more than 64 elements");
  }
  std::set<std::string_view> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) {
      throw MatroidError(ErrorCode::kInvalidGroundSet,
                         "duplicate label '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::Numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(n > 0 ? n : 0);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  const auto& l = *labels_;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

Subset GroundSet::SubsetOf(
    std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (std::string_view label : labels) {
    std::optional<int> index = IndexOf(label);
    if (!index) {
      throw MatroidError(ErrorCode::kElementOutOfRange,
                         "unknown label '" + std::string(label) + "'");
    }
    s = s.With(*index);
  }
  return s;
}

Subset GroundSet::SubsetOf(const std::vector<std::string>& labels) const {
  Subset s;
  for (const std::string& label : labels) {
    std::optional<int> index = IndexOf(label);
    if (!index) {
      throw MatroidError(ErrorCode::kElementOutOfRange,
                         "unknown label '" + label + "'");
    }
    s = s.With(*index);
  }
  return s;
}

std::string GroundSet::Format(Subset s) const {
  std::string out = "{";
  bool first = true;
  ForEachElement(s, [&](int i) {
    if (!first) out += ',';
    first = false;
    out += i < size() ? label(i) : "#" + std::to_string(i);
  });
  out += '}';
  return out;
}

// SetFamily

SetFamily::SetFamily(GroundSet ground, std::vector<Subset> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  const Subset all = ground_.All();
  for (Subset s : sets_) {
    if (!s.IsSubsetOf(all)) {
      throw MatroidError(ErrorCode::kElementOutOfRange,
                         "member has an element outside the ground set", {s});
    }
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::optional<std::size_t> SetFamily::IndexOf(Subset s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

Subset SetFamily::Union() const {
  Subset u;
  for (Subset s : sets_) u = u | s;
  return u;
}

Subset SetFamily::Intersection() const {
  Subset x = ground_.All();
  for (Subset s : sets_) x = x & s;
  return x;
}

bool SetFamily::IsSubfamilyOf(const SetFamily& other) const {
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(),
                       sets_.end());
}

std::string SetFamily::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += ground_.Format(sets_[i]);
  }
  out += '}';
  return out;
}

// Operators

SetFamily Low(const SetFamily& fam) {
  std::vector<Subset> out;
  for (Subset a : fam) {
    ForEachSubsetOf(a, [&](Subset x) { out.push_back(x); });
  }
  return SetFamily(fam.ground(), std::move(out));
}

SetFamily Max(const SetFamily& fam) {
  std::vector<Subset> out;
  for (Subset x : fam) {
    bool maximal = true;
    for (Subset y : fam) {
      if (x != y && x.IsSubsetOf(y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return SetFamily(fam.ground(), std::move(out));
}

SetFamily Com(const SetFamily& fam) {
  const Subset all = fam.ground().All();
  std::vector<Subset> out;
  out.reserve(fam.size());
  for (Subset a : fam) out.push_back(all - a);
  return SetFamily(fam.ground(), std::move(out));
}

bool IsCovering(const SetFamily& fam, Subset support) {
  return !fam.contains(Subset()) && fam.Union() == support;
}

bool IsPartition(const SetFamily& fam, Subset support) {
  if (!IsCovering(fam, support)) return false;
  int total = 0;
  for (Subset s : fam) total += s.size();
  return total == support.size();
}

// Partition

Partition::Partition(SetFamily blocks)
    : blocks_(std::move(blocks)), support_(blocks_.Union()) {
  if (!IsPartition(blocks_, support_)) {
    throw MatroidError(
        ErrorCode::kInvalidPartition,
        "blocks must be nonempty and pairwise disjoint: " + blocks_.ToString());
  }
}

Partition::Partition(SetFamily blocks, Subset support)
    : Partition(std::move(blocks)) {
  if (support_ != support) {
    throw MatroidError(ErrorCode::kInvalidPartition,
                       "blocks cover " + ground().Format(support_) +
                           ", expected " + ground().Format(support));
  }
}

uint64_t CombinationNumber(const Partition& p) {
  uint64_t product = 1;
  for (Subset block : p.blocks())
    product *= static_cast<uint64_t>(block.size());
  return product;
}

SetFamily Transversals(const Partition& p) {
  std::vector<Subset> partial = {Subset()};
  for (Subset block : p.blocks()) {
    std::vector<Subset> next;
    next.reserve(partial.size() * block.size());
    for (Subset prefix : partial) {
      ForEachElement(block, [&](int e) { next.push_back(prefix.With(e)); });
    }
    partial = std::move(next);
  }
  return SetFamily(p.ground(), std::move(partial));
}

std::vector<Partition> AllPartitions(const GroundSet& ground, Subset support) {
  std::vector<Partition> out;
  std::vector<Subset> blocks;
  // The block holding the lowest unplaced element is chosen among all
  // subsets of the remaining elements, so each partition is built once.
  std::function<void(Subset)> place = [&](Subset remaining) {
    if (remaining.empty()) {
      out.emplace_back(SetFamily(ground, blocks));
      return;
    }
    const int first = remaining.Lowest();
    const Subset rest = remaining.Without(first);
    ForEachSubsetOf(rest, [&](Subset companions) {
      blocks.push_back(companions.With(first));
      place(rest - companions);
      blocks.pop_back();
    });
  };
  place(support);
  return out;
}

}  // namespace matroidlab
