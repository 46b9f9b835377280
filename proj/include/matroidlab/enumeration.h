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

// Exhaustive enumeration of labelled matroids on {1, ..., n}.
//
// For each rank r the r-subsets are indexed in canonical order and base
// families are grown by a depth-first include/exclude search that starts
// from the family's least base. Every exchange requirement
// (B1, B2, x) is attached to the last index it mentions; once the search
// has decided that index, a requirement whose B1 and B2 are both in and
// whose replacement candidates are all out prunes the branch. Leaves are
// therefore exactly the families satisfying the base axioms.

#ifndef MATROIDLAB_ENUMERATION_H_
#define MATROIDLAB_ENUMERATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matroidlab/matroid.h"

namespace matroidlab {

inline constexpr int kMaxEnumerationSize = 6;

// Every labelled matroid on GroundSet::Numbered(n), each exactly once,
// ordered by CanonicalLess (rank ascending, then base lists). Throws
// kGroundSetTooLarge for n > 6 and kInvalidGroundSet for n < 1.
// `threads`: 0 = OpenMP default.
std::vector<Matroid> EnumerateMatroids(int n,
                                       std::optional<int> rank = std::nullopt,
                                       int threads = 0);

// Single-threaded reference producing the identical sequence.
std::vector<Matroid> EnumerateMatroidsSerial(
    int n, std::optional<int> rank = std::nullopt);

// Matroids on 1..n elements, concatenated by ground size.
std::vector<Matroid> EnumerateUpTo(int n, int threads = 0);

// Number of isomorphism classes among `population`.
std::size_t CountIsomorphismClasses(std::span<const Matroid> population,
                                    int threads = 0);

}  // namespace matroidlab

#endif  // MATROIDLAB_ENUMERATION_H_
