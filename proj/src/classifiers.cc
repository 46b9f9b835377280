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

#include "matroidlab/classifiers.h"

#include <stdexcept>
#include <utility>

#include "matroidlab/forming.h"
#include "matroidlab/parallel.h"

namespace matroidlab {
namespace {

// Elements e of `candidates` (ascending) with `prefix + e` a base.
std::vector<int> BaseExtensions(const Matroid& m, Subset prefix,
                                Subset candidates) {
  std::vector<int> out;
  ForEachElement(candidates, [&](int e) {
    if (m.IsBase(prefix.With(e))) out.push_back(e);
  });
  return out;
}

void CheckSearchCap(const Matroid& m, const ClassifierOptions& options) {
  const std::size_t cap = std::min<std::size_t>(options.search_cap, 63);
  if (m.bases().size() > cap) {
    throw MatroidError(ErrorCode::kSearchCapExceeded,
                       std::to_string(m.bases().size()) +
                           " bases exceed the minimality search cap of " +
                           std::to_string(cap));
  }
}

// Tests subfamilies (bitmasks over base indices) for the base axioms and the
// preserved union/intersection. Exchange candidates are precomputed once:
// for bases i, j and x in B_i - B_j, the indices k with
// B_k = (B_i - x) + y for some y in B_j - B_i.
class SubfamilyChecker {
 public:
  SubfamilyChecker(const Matroid& m, Preserved preserved)
      : bases_(m.bases().sets()),
        preserved_(preserved),
        target_(preserved == Preserved::kUnion ? m.BaseUnion()
                                               : m.BaseIntersection()),
        count_(bases_.size()),
        exchange_(count_ * count_) {
    for (std::size_t i = 0; i < count_; ++i) {
      for (std::size_t j = 0; j < count_; ++j) {
        const Subset only_j = bases_[j] - bases_[i];
        ForEachElement(bases_[i] - bases_[j], [&](int x) {
          uint64_t candidates = 0;
          ForEachElement(only_j, [&](int y) {
            std::optional<std::size_t> k =
                m.bases().IndexOf(bases_[i].Without(x).With(y));
            if (k) candidates |= uint64_t{1} << *k;
          });
          exchange_[i * count_ + j].push_back(candidates);
        });
      }
    }
  }

  bool Shrinks(uint64_t mask) const {
    Subset combined = preserved_ == Preserved::kUnion ? Subset() : All();
    for (uint64_t rest = mask; rest; rest &= rest - 1) {
      const Subset b = bases_[std::countr_zero(rest)];
      combined = preserved_ == Preserved::kUnion ? combined | b : combined & b;
    }
    if (combined != target_) return false;
    for (uint64_t ri = mask; ri; ri &= ri - 1) {
      const std::size_t i = std::countr_zero(ri);
      for (uint64_t rj = mask; rj; rj &= rj - 1) {
        const std::size_t j = std::countr_zero(rj);
        for (uint64_t candidates : exchange_[i * count_ + j]) {
          if ((candidates & mask) == 0) return false;
        }
      }
    }
    return true;
  }

 private:
  static Subset All() { return Subset(~uint64_t{0}); }

  const std::vector<Subset>& bases_;
  Preserved preserved_;
  Subset target_;
  std::size_t count_;
  std::vector<std::vector<uint64_t>> exchange_;
};

ClassificationResult MinimalityVerdict(const Matroid& m, Preserved preserved,
                                       const ClassifierOptions& options) {
  CheckSearchCap(m, options);
  std::optional<uint64_t> mask =
      kernels::FindShrinkingSubfamily(m, preserved, options.threads);
  if (!mask) return {};
  std::vector<Subset> members;
  for (uint64_t rest = *mask; rest; rest &= rest - 1) {
    members.push_back(m.bases()[std::countr_zero(rest)]);
  }
  return {false, SubfamilyWitness{SetFamily(m.ground(), std::move(members)),
                                  preserved}};
}

}  // namespace

namespace kernels {

std::vector<uint64_t> SubfamiliesOfSize(std::size_t base_count,
                                        std::size_t size) {
  std::vector<uint64_t> out;
  if (size == 0 || size > base_count) return out;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    uint64_t mask = 0;
    for (std::size_t i : pick) mask |= uint64_t{1} << i;
    out.push_back(mask);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = size;
    while (pos > 0 && pick[pos - 1] == base_count - size + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
  }
  return out;
}

std::optional<uint64_t> FindShrinkingSubfamilySerial(const Matroid& m,
                                                     Preserved preserved) {
  const SubfamilyChecker checker(m, preserved);
  const std::size_t count = m.bases().size();
  for (std::size_t size = count - 1; size >= 1; --size) {
    for (uint64_t mask : SubfamiliesOfSize(count, size)) {
      if (checker.Shrinks(mask)) return mask;
    }
  }
  return std::nullopt;
}

std::optional<uint64_t> FindShrinkingSubfamily(const Matroid& m,
                                               Preserved preserved,
                                               int threads) {
  const SubfamilyChecker checker(m, preserved);
  const std::size_t count = m.bases().size();
  for (std::size_t size = count - 1; size >= 1; --size) {
    const std::vector<uint64_t> masks = SubfamiliesOfSize(count, size);
    std::optional<std::size_t> hit =
        FirstMatch(masks.size(), threads,
                   [&](std::size_t i) { return checker.Shrinks(masks[i]); });
    if (hit) return masks[*hit];
  }
  return std::nullopt;
}

}  // namespace kernels

ClassificationResult IsUniqueExpansion(const Matroid& m,
                                       const ClassifierOptions& options) {
  const SetFamily secondary = SecondaryBases(m);
  const std::size_t base_count = m.bases().size();
  // Pairs (A, B) in lexicographic order; the first offending pair holds the
  // least witness.
  std::optional<std::size_t> hit = FirstMatch(
      secondary.size() * base_count, options.threads, [&](std::size_t k) {
        const Subset a = secondary[k / base_count];
        const Subset b = m.bases()[k % base_count];
        return BaseExtensions(m, a, b).size() >= 2;
      });
  if (!hit) return {};
  const Subset a = secondary[*hit / base_count];
  const Subset b = m.bases()[*hit % base_count];
  const std::vector<int> extensions = BaseExtensions(m, a, b);
  return {false, ExpansionWitness{a, b, extensions[0], extensions[1]}};
}

ClassificationResult IsUniqueExchange(const Matroid& m,
                                      const ClassifierOptions& options) {
  const std::size_t count = m.bases().size();
  auto offending_removal = [&](Subset b1, Subset b2) -> std::optional<int> {
    for (int x : (b1 - b2).Elements()) {
      if (BaseExtensions(m, b1.Without(x), b2 - b1).size() >= 2) return x;
    }
    return std::nullopt;
  };
  std::optional<std::size_t> hit =
      FirstMatch(count * count, options.threads, [&](std::size_t k) {
        return offending_removal(m.bases()[k / count], m.bases()[k % count])
            .has_value();
      });
  if (!hit) return {};
  const Subset b1 = m.bases()[*hit / count];
  const Subset b2 = m.bases()[*hit % count];
  const int x = *offending_removal(b1, b2);
  const std::vector<int> ys = BaseExtensions(m, b1.Without(x), b2 - b1);
  return {false, ExchangeWitness{b1, b2, x, ys[0], ys[1]}};
}

ClassificationResult IsUnionMinimal(const Matroid& m,
                                    const ClassifierOptions& options) {
  return MinimalityVerdict(m, Preserved::kUnion, options);
}

ClassificationResult IsIntersectionMinimal(const Matroid& m,
                                           const ClassifierOptions& options) {
  return MinimalityVerdict(m, Preserved::kIntersection, options);
}

std::optional<Partition> RecoverPartition(const Matroid& m) {
  FormingFamily forming = FormingBaseFamily(m);
  if (!IsPartition(forming.family, m.BaseUnion())) return std::nullopt;
  return Partition(std::move(forming.family));
}

bool IsTransversalOf(const Matroid& m, const Partition& p) {
  if (!(p.ground() == m.ground()) || p.support() != m.BaseUnion()) {
    throw MatroidError(ErrorCode::kSupportMismatch,
                       p.blocks().ToString() + " does not partition " +
                           m.ground().Format(m.BaseUnion()));
  }
  for (Subset b : m.bases()) {
    for (Subset block : p.blocks()) {
      if ((b & block).size() != 1) return false;
    }
  }
  if (!(Transversals(p) == m.bases()) ||
      m.bases().size() != CombinationNumber(p)) {
    throw std::logic_error(
        "bases meet every block once but differ from the transversal product");
  }
  return true;
}

bool WitnessConfirms(const Matroid& m, const Witness& witness) {
  if (const auto* w = std::get_if<ExpansionWitness>(&witness)) {
    return m.rank() > 0 && w->secondary.size() == m.rank() - 1 &&
           m.IsIndependent(w->secondary) && m.IsBase(w->base) &&
           w->first != w->second && w->base.contains(w->first) &&
           w->base.contains(w->second) &&
           m.IsBase(w->secondary.With(w->first)) &&
           m.IsBase(w->secondary.With(w->second));
  }
  if (const auto* w = std::get_if<ExchangeWitness>(&witness)) {
    const Subset only_to = w->to - w->from;
    const Subset removed = w->from.Without(w->removed);
    return m.IsBase(w->from) && m.IsBase(w->to) &&
           (w->from - w->to).contains(w->removed) && w->first != w->second &&
           only_to.contains(w->first) && only_to.contains(w->second) &&
           m.IsBase(removed.With(w->first)) &&
           m.IsBase(removed.With(w->second));
  }
  const auto& w = std::get<SubfamilyWitness>(witness);
  if (w.subfamily.empty() || w.subfamily.size() >= m.bases().size() ||
      !w.subfamily.IsSubfamilyOf(m.bases())) {
    return false;
  }
  const bool preserved =
      w.preserved == Preserved::kUnion
          ? w.subfamily.Union() == m.BaseUnion()
          : w.subfamily.Intersection() == m.BaseIntersection();
  if (!preserved) return false;
  try {
    Matroid::FromBases(w.subfamily);
  } catch (const MatroidError&) {
    return false;
  }
  return true;
}

std::string DescribeWitness(const GroundSet& ground, const Witness& witness) {
  if (const auto* w = std::get_if<ExpansionWitness>(&witness)) {
    return "A=" + ground.Format(w->secondary) + " B=" + ground.Format(w->base) +
           " e1=" + ground.label(w->first) + " e2=" + ground.label(w->second);
  }
  if (const auto* w = std::get_if<ExchangeWitness>(&witness)) {
    return "B1=" + ground.Format(w->from) + " B2=" + ground.Format(w->to) +
           " x=" + ground.label(w->removed) + " y1=" + ground.label(w->first) +
           " y2=" + ground.label(w->second);
  }
  const auto& w = std::get<SubfamilyWitness>(witness);
  return std::string(w.preserved == Preserved::kUnion ? "union"
                                                      : "intersection") +
         "-preserving subfamily " + w.subfamily.ToString();
}

}  // namespace matroidlab
