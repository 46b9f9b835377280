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

// Secondary bases, the expansion operator and forming base families.
//
// For a matroid M of rank r > 0:
//   s(M)    = independent sets of size r - 1 (secondary bases)
//   K_M(X)  = { a : r(X + a) = r(X) + 1 }   (expansion set of X)
//   F(M)    = { K_M(A) : A in s(M) }
//   F_M(B)  = { K_M(A) : A in s(M), A ⊆ B } = { K_M(B - b) : b in B }

#ifndef MATROIDLAB_FORMING_H_
#define MATROIDLAB_FORMING_H_

#include <optional>

#include "matroidlab/matroid.h"

namespace matroidlab {

enum class FormingSource { kGlobal, kRelativeToBase };

struct FormingFamily {
  SetFamily family;
  FormingSource source;
  // The base B for F_M(B); empty for F(M).
  std::optional<Subset> base;
};

// Throws MatroidError(kRankZero) for rank-0 matroids.
SetFamily SecondaryBases(const Matroid& m);

// K_M(x). Defined for every subset; always disjoint from x.
Subset ExpansionSet(const Matroid& m, Subset x);

// F(M), deduplicated, computed from secondary bases in canonical order.
// Throws MatroidError(kRankZero).
FormingFamily FormingBaseFamily(const Matroid& m);

// F_M(B). Throws kRankZero, or kNotABase when `base` is not a base.
FormingFamily FormingBaseFamilyAt(const Matroid& m, Subset base);

}  // namespace matroidlab

#endif  // MATROIDLAB_FORMING_H_
