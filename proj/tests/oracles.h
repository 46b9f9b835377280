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

// Independent reference implementations used to cross-check the library.
// They work on std::set<std::set<int>> and never call library algorithms,
// only its types for input and output.

#ifndef MATROIDLAB_TESTS_ORACLES_H_
#define MATROIDLAB_TESTS_ORACLES_H_

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "matroidlab/matroid.h"

namespace matroidlab::testing {

using IntSet = std::set<int>;
using IntFamily = std::set<IntSet>;

IntSet ToIntSet(Subset s);
IntFamily ToIntFamily(const SetFamily& family);

// Matroid on GroundSet::Numbered(n) from sets written with 1-based labels.
Matroid MakeMatroid(int n,
                    std::initializer_list<std::initializer_list<int>> bases);
// Subset of {1..n} written with 1-based labels.
Subset Labels(std::initializer_list<int> labels);

// True iff `bases` satisfies the base axioms, tested literally.
bool SatisfiesBaseAxioms(const IntFamily& bases);

// Base families of every labelled matroid on {0..n-1}, found by testing
// every family of equal-size subsets for each rank.
std::set<IntFamily> AllBaseFamiliesBruteForce(int n);

// Independent iff contained in some base.
bool IndependentOracle(const IntFamily& bases, const IntSet& x);
// Largest independent subset of x, by scanning all subsets of x.
int RankOracle(const IntFamily& bases, const IntSet& x);
// { a in E : r(x + a) = r(x) + 1 }.
IntSet ExpansionOracle(const IntFamily& bases, int n, const IntSet& x);

// Unique expansion, tested literally from the definition.
bool UniqueExpansionOracle(const IntFamily& bases);
// Unique exchange, tested literally from the definition.
bool UniqueExchangeOracle(const IntFamily& bases);
// Union (or intersection) minimality by trying every proper subfamily.
bool MinimalOracle(const IntFamily& bases, bool preserve_union);

// Number of sets meeting every block exactly once, counted by brute force.
uint64_t TransversalCountOracle(const std::vector<IntSet>& blocks, int n);

}  // namespace matroidlab::testing

#endif  // MATROIDLAB_TESTS_ORACLES_H_
