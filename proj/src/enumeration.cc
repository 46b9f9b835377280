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

#include "matroidlab/enumeration.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "matroidlab/parallel.h"

namespace matroidlab {
namespace {

struct ExchangeRequirement {
  uint32_t from;        // bit of B1
  uint32_t to;          // bit of B2
  uint32_t candidates;  // bits of every (B1 - x) + y, y in B2 - B1
};

class RankSearch {
 public:
  RankSearch(int n, int rank) {
    ForEachSubsetOf(Subset::FirstN(n), [&](Subset s) {
      if (s.size() == rank) subsets_.push_back(s);
    });
    std::sort(subsets_.begin(), subsets_.end());
    const std::size_t m = subsets_.size();
    requirements_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        const Subset only_j = subsets_[j] - subsets_[i];
        ForEachElement(subsets_[i] - subsets_[j], [&](int x) {
          uint32_t candidates = 0;
          ForEachElement(only_j, [&](int y) {
            candidates |= uint32_t{1}
                          << IndexOf(subsets_[i].Without(x).With(y));
          });
          const std::size_t last = std::max<std::size_t>(
              std::max(i, j), 31 - std::countl_zero(candidates));
          requirements_[last].push_back(
              {uint32_t{1} << i, uint32_t{1} << j, candidates});
        });
      }
    }
  }

  std::size_t subset_count() const { return subsets_.size(); }

  // All valid families whose least member has index `first`, as masks.
  std::vector<uint32_t> FamiliesStartingAt(std::size_t first) const {
    std::vector<uint32_t> out;
    const uint32_t included = uint32_t{1} << first;
    if (Consistent(first, included)) Extend(first + 1, included, out);
    return out;
  }

  Matroid ToMatroid(const GroundSet& ground, uint32_t mask) const {
    std::vector<Subset> bases;
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
      bases.push_back(subsets_[std::countr_zero(rest)]);
    }
    return Matroid::FromBases(SetFamily(ground, std::move(bases)));
  }

 private:
  std::size_t IndexOf(Subset s) const {
    return std::lower_bound(subsets_.begin(), subsets_.end(), s) -
           subsets_.begin();
  }

  bool Consistent(std::size_t decided, uint32_t included) const {
    for (const ExchangeRequirement& r : requirements_[decided]) {
      if ((included & r.from) && (included & r.to) &&
          (included & r.candidates) == 0) {
        return false;
      }
    }
    return true;
  }

  void Extend(std::size_t pos, uint32_t included,
              std::vector<uint32_t>& out) const {
    if (pos == subsets_.size()) {
      out.push_back(included);
      return;
    }
    const uint32_t with = included | (uint32_t{1} << pos);
    if (Consistent(pos, with)) Extend(pos + 1, with, out);
    if (Consistent(pos, included)) Extend(pos + 1, included, out);
  }

  std::vector<Subset> subsets_;
  std::vector<std::vector<ExchangeRequirement>> requirements_;
};

void CheckSize(int n) {
  if (n < 1) {
    throw MatroidError(ErrorCode::kInvalidGroundSet,
                       "ground set size must be at least 1");
  }
  if (n > kMaxEnumerationSize) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "enumeration is limited to " +
                           std::to_string(kMaxEnumerationSize) +
                           " elements, got " + std::to_string(n));
  }
}

std::vector<int> Ranks(int n, std::optional<int> rank) {
  std::vector<int> out;
  for (int r = 0; r <= n; ++r) {
    if (!rank || *rank == r) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<Matroid> EnumerateMatroidsSerial(int n, std::optional<int> rank) {
  CheckSize(n);
  const GroundSet ground = GroundSet::Numbered(n);
  std::vector<Matroid> out;
  for (int r : Ranks(n, rank)) {
    const RankSearch search(n, r);
    for (std::size_t first = 0; first < search.subset_count(); ++first) {
      for (uint32_t mask : search.FamiliesStartingAt(first)) {
        out.push_back(search.ToMatroid(ground, mask));
      }
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::vector<Matroid> EnumerateMatroids(int n, std::optional<int> rank,
                                       int threads) {
  CheckSize(n);
  const GroundSet ground = GroundSet::Numbered(n);
  const int workers = ResolveThreads(threads);
  std::vector<Matroid> out;
  for (int r : Ranks(n, rank)) {
    const RankSearch search(n, r);
    const long count = static_cast<long>(search.subset_count());
    std::vector<std::vector<uint32_t>> by_first(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long first = 0; first < count; ++first) {
      by_first[first] = search.FamiliesStartingAt(first);
    }
    for (const auto& masks : by_first) {
      for (uint32_t mask : masks) out.push_back(search.ToMatroid(ground, mask));
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::vector<Matroid> EnumerateUpTo(int n, int threads) {
  CheckSize(n);
  std::vector<Matroid> out;
  for (int size = 1; size <= n; ++size) {
    std::vector<Matroid> level = EnumerateMatroids(size, std::nullopt, threads);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

std::size_t CountIsomorphismClasses(std::span<const Matroid> population,
                                    int threads) {
  std::vector<std::vector<uint64_t>> codes(population.size());
  const long count = static_cast<long>(population.size());
#pragma omp parallel for schedule(dynamic, 8) \
    num_threads(ResolveThreads(threads))
  for (long i = 0; i < count; ++i) codes[i] = CanonicalCode(population[i]);
  return std::set<std::vector<uint64_t>>(codes.begin(), codes.end()).size();
}

}  // namespace matroidlab
