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

#include "matroidlab/forming.h"

#include <utility>
#include <vector>

namespace matroidlab {
namespace {

void RequirePositiveRank(const Matroid& m, const char* what) {
  if (m.rank() == 0) {
    throw MatroidError(ErrorCode::kRankZero,
                       std::string(what) + " needs a matroid of positive rank");
  }
}

}  // namespace

SetFamily SecondaryBases(const Matroid& m) {
  RequirePositiveRank(m, "secondary base family");
  // Independent sets of size r - 1 are exactly the one-element deletions of
  // bases.
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    ForEachElement(b, [&](int e) { out.push_back(b.Without(e)); });
  }
  return SetFamily(m.ground(), std::move(out));
}

Subset ExpansionSet(const Matroid& m, Subset x) {
  const int base_rank = m.RankOf(x);
  Subset out;
  for (int a = 0; a < m.ground().size(); ++a) {
    if (m.RankOf(x.With(a)) == base_rank + 1) out = out.With(a);
  }
  return out;
}

FormingFamily FormingBaseFamily(const Matroid& m) {
  RequirePositiveRank(m, "forming base family");
  std::vector<Subset> blocks;
  for (Subset a : SecondaryBases(m)) blocks.push_back(ExpansionSet(m, a));
  return {SetFamily(m.ground(), std::move(blocks)), FormingSource::kGlobal,
          std::nullopt};
}

FormingFamily FormingBaseFamilyAt(const Matroid& m, Subset base) {
  RequirePositiveRank(m, "forming base family");
  if (!m.IsBase(base)) {
    throw MatroidError(ErrorCode::kNotABase,
                       m.ground().Format(base) + " is not a base", {base});
  }
  std::vector<Subset> blocks;
  ForEachElement(
      base, [&](int b) { blocks.push_back(ExpansionSet(m, base.Without(b))); });
  return {SetFamily(m.ground(), std::move(blocks)),
          FormingSource::kRelativeToBase, base};
}

}  // namespace matroidlab
