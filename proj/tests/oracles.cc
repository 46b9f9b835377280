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

#include "oracles.h"

#include <algorithm>

namespace matroidlab::testing {
namespace {

std::vector<IntSet> AllSubsets(const IntSet& x) {
  std::vector<int> items(x.begin(), x.end());
  std::vector<IntSet> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << items.size()); ++mask) {
    IntSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

IntSet Range(int n) {
  IntSet out;
  for (int i = 0; i < n; ++i) out.insert(i);
  return out;
}

IntSet Minus(IntSet a, const IntSet& b) {
  for (int e : b) a.erase(e);
  return a;
}

// Elements y of `candidates` with (b - x) + y in `bases`.
int Replacements(const IntFamily& bases, const IntSet& b, int x,
                 const IntSet& candidates) {
  int count = 0;
  for (int y : candidates) {
    IntSet swapped = b;
    swapped.erase(x);
    swapped.insert(y);
    count += bases.count(swapped) ? 1 : 0;
  }
  return count;
}

}  // namespace

IntSet ToIntSet(Subset s) {
  IntSet out;
  for (int i = 0; i < 64; ++i) {
    if (s.contains(i)) out.insert(i);
  }
  return out;
}

IntFamily ToIntFamily(const SetFamily& family) {
  IntFamily out;
  for (Subset s : family) out.insert(ToIntSet(s));
  return out;
}

Subset Labels(std::initializer_list<int> labels) {
  Subset s;
  for (int label : labels) s = s.With(label - 1);
  return s;
}

Matroid MakeMatroid(int n,
                    std::initializer_list<std::initializer_list<int>> bases) {
  std::vector<Subset> sets;
  for (auto b : bases) sets.push_back(Labels(b));
  return Matroid::FromBases(SetFamily(GroundSet::Numbered(n), std::move(sets)));
}

bool SatisfiesBaseAxioms(const IntFamily& bases) {
  if (bases.empty()) return false;
  const std::size_t size = bases.begin()->size();
  for (const IntSet& b : bases) {
    if (b.size() != size) return false;
  }
  for (const IntSet& b1 : bases) {
    for (const IntSet& b2 : bases) {
      for (int x : Minus(b1, b2)) {
        if (Replacements(bases, b1, x, Minus(b2, b1)) == 0) return false;
      }
    }
  }
  return true;
}

std::set<IntFamily> AllBaseFamiliesBruteForce(int n) {
  std::set<IntFamily> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<IntSet> candidates;
    for (const IntSet& s : AllSubsets(Range(n))) {
      if (static_cast<int>(s.size()) == r) candidates.push_back(s);
    }
    for (uint64_t mask = 1; mask < (uint64_t{1} << candidates.size()); ++mask) {
      IntFamily family;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (mask >> i & 1) family.insert(candidates[i]);
      }
      if (SatisfiesBaseAxioms(family)) out.insert(std::move(family));
    }
  }
  return out;
}

bool IndependentOracle(const IntFamily& bases, const IntSet& x) {
  return std::any_of(bases.begin(), bases.end(), [&](const IntSet& b) {
    return std::includes(b.begin(), b.end(), x.begin(), x.end());
  });
}

int RankOracle(const IntFamily& bases, const IntSet& x) {
  int best = 0;
  for (const IntSet& s : AllSubsets(x)) {
    if (IndependentOracle(bases, s))
      best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

IntSet ExpansionOracle(const IntFamily& bases, int n, const IntSet& x) {
  const int rank = RankOracle(bases, x);
  IntSet out;
  for (int a = 0; a < n; ++a) {
    IntSet grown = x;
    grown.insert(a);
    if (RankOracle(bases, grown) == rank + 1) out.insert(a);
  }
  return out;
}

bool UniqueExpansionOracle(const IntFamily& bases) {
  for (const IntSet& base : bases) {
    for (int removed : base) {
      IntSet a = base;
      a.erase(removed);
      for (const IntSet& b : bases) {
        int hits = 0;
        for (int e : b) {
          IntSet grown = a;
          grown.insert(e);
          hits += bases.count(grown) ? 1 : 0;
        }
        if (hits > 1) return false;
      }
    }
  }
  return true;
}

bool UniqueExchangeOracle(const IntFamily& bases) {
  for (const IntSet& b1 : bases) {
    for (const IntSet& b2 : bases) {
      for (int x : Minus(b1, b2)) {
        if (Replacements(bases, b1, x, Minus(b2, b1)) > 1) return false;
      }
    }
  }
  return true;
}

bool MinimalOracle(const IntFamily& bases, bool preserve_union) {
  const std::vector<IntSet> list(bases.begin(), bases.end());
  auto combine = [&](const std::vector<IntSet>& members) {
    IntSet acc = members.front();
    for (const IntSet& s : members) {
      if (preserve_union) {
        acc.insert(s.begin(), s.end());
      } else {
        IntSet meet;
        std::set_intersection(acc.begin(), acc.end(), s.begin(), s.end(),
                              std::inserter(meet, meet.end()));
        acc = std::move(meet);
      }
    }
    return acc;
  };
  const IntSet target = combine(list);
  const uint64_t full = (uint64_t{1} << list.size()) - 1;
  for (uint64_t mask = 1; mask < full; ++mask) {
    std::vector<IntSet> members;
    IntFamily family;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask >> i & 1) {
        members.push_back(list[i]);
        family.insert(list[i]);
      }
    }
    if (combine(members) == target && SatisfiesBaseAxioms(family)) return false;
  }
  return true;
}

uint64_t TransversalCountOracle(const std::vector<IntSet>& blocks, int n) {
  uint64_t count = 0;
  for (const IntSet& x : AllSubsets(Range(n))) {
    bool ok = true;
    IntSet covered;
    for (const IntSet& block : blocks) {
      int meet = 0;
      for (int e : block) meet += x.count(e) ? 1 : 0;
      ok = ok && meet == 1;
      covered.insert(block.begin(), block.end());
    }
    ok =
        ok && std::includes(covered.begin(), covered.end(), x.begin(), x.end());
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace matroidlab::testing
