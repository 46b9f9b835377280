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

#ifndef MATROIDLAB_SUBSET_H_
#define MATROIDLAB_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace matroidlab {

inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set of at most 64 elements, stored as a bitmask over
// element indices. Which ground set it belongs to is tracked by the owning
// SetFamily or Matroid.
//
// Ordering is canonical: by cardinality first, then lexicographically on the
// ascending list of member indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint64_t bits) : bits_(bits) {}

  static constexpr Subset Of(std::initializer_list<int> indices) {
    uint64_t bits = 0;
    for (int i : indices) bits |= uint64_t{1} << i;
    return Subset(bits);
  }
  static constexpr Subset Singleton(int index) {
    return Subset(uint64_t{1} << index);
  }
  // {0, 1, ..., n-1}.
  static constexpr Subset FirstN(int n) {
    return Subset(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Index of the smallest member; undefined on the empty set.
  constexpr int Lowest() const { return std::countr_zero(bits_); }
  // Index of the largest member; undefined on the empty set.
  constexpr int Highest() const { return 63 - std::countl_zero(bits_); }

  constexpr Subset With(int index) const {
    return Subset(bits_ | (uint64_t{1} << index));
  }
  constexpr Subset Without(int index) const {
    return Subset(bits_ & ~(uint64_t{1} << index));
  }

  std::vector<int> Elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    const int ca = a.size();
    const int cb = b.size();
    if (ca != cb) return ca <=> cb;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // Members below the lowest differing index are shared, so the sorted
    // lists first differ there; whoever owns that index is smaller.
    const uint64_t diff = a.bits_ ^ b.bits_;
    const uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) ? std::strong_ordering::less
                              : std::strong_ordering::greater;
  }

 private:
  uint64_t bits_ = 0;
};

// Calls f(index) for each member in ascending order.
template <typename F>
constexpr void ForEachElement(Subset s, F&& f) {
  for (uint64_t bits = s.bits(); bits != 0; bits &= bits - 1) {
    f(std::countr_zero(bits));
  }
}

// Calls f(sub) for every subset of `s`, including the empty set and `s`.
template <typename F>
constexpr void ForEachSubsetOf(Subset s, F&& f) {
  uint64_t sub = s.bits();
  while (true) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

}  // namespace matroidlab

#endif  // MATROIDLAB_SUBSET_H_
