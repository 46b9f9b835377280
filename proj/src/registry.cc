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

#include <numeric>
#include <stdexcept>
#include <utility>

#include "matroidlab/classifiers.h"
#include "matroidlab/forming.h"
#include "matroidlab/harness.h"

namespace matroidlab {
namespace {

// Classifier calls inside checks stay serial; Verify parallelizes over the
// population instead.
constexpr ClassifierOptions kSerial{.threads = 1};

CheckOutcome Pass() { return {}; }
CheckOutcome Fail(std::string witness) { return {false, std::move(witness)}; }

std::string Show(const Matroid& m) { return m.bases().ToString(); }
std::string Show(const Matroid& m, Subset s) { return m.ground().Format(s); }

bool PositiveRank(const Matroid& m) { return m.rank() > 0; }

bool UniqueExpansion(const Matroid& m) {
  return m.rank() > 0 && IsUniqueExpansion(m, kSerial).verdict;
}

std::string VerdictWord(bool v) { return v ? "true" : "false"; }

std::string VerdictText(const Matroid& m, const ClassificationResult& r) {
  if (r.verdict) return "true";
  return "false (" + DescribeWitness(m.ground(), *r.witness) + ")";
}

bool MeetsEachOnce(Subset x, const SetFamily& blocks) {
  for (Subset block : blocks) {
    if ((x & block).size() != 1) return false;
  }
  return true;
}

// Every base meets every block in exactly one element.
bool MeetsEveryBlockOnce(const Matroid& m, const SetFamily& blocks) {
  for (Subset b : m.bases()) {
    if (!MeetsEachOnce(b, blocks)) return false;
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

Partition ClassesOf(const GroundSet& ground, Subset support, UnionFind& uf) {
  std::vector<Subset> blocks(ground.size());
  ForEachElement(support, [&](int e) {
    const int root = uf.Find(e);
    blocks[root] = blocks[root].With(e);
  });
  std::vector<Subset> nonempty;
  for (Subset b : blocks) {
    if (!b.empty()) nonempty.push_back(b);
  }
  return Partition(SetFamily(ground, std::move(nonempty)), support);
}

// e and f share a circuit iff some base B holds e but not f and
// (B - e) + f is again a base.
Partition ConnectedComponents(const Matroid& m) {
  const int n = m.ground().size();
  UnionFind uf(n);
  for (Subset b : m.bases()) {
    ForEachElement(b, [&](int e) {
      ForEachElement(m.ground().All() - b, [&](int f) {
        if (m.IsBase(b.Without(e).With(f))) uf.Join(e, f);
      });
    });
  }
  return ClassesOf(m.ground(), m.ground().All(), uf);
}

template <typename F>
void AddCheck(std::vector<TheoremCheck>& out, std::string id,
              std::string statement,
              std::function<bool(const Matroid&)> applies, F&& run) {
  out.push_back({std::move(id), std::move(statement), std::move(applies),
                 std::forward<F>(run)});
}

}  // namespace

Partition ParallelClasses(const Matroid& m) {
  const Subset support = m.BaseUnion();
  UnionFind uf(m.ground().size());
  ForEachElement(support, [&](int a) {
    ForEachElement(support, [&](int b) {
      if (a < b && m.RankOf(Subset::Of({a, b})) == 1) uf.Join(a, b);
    });
  });
  return ClassesOf(m.ground(), support, uf);
}

ConstructionSeed SeedFor(const Matroid& m) {
  Partition components = ConnectedComponents(m);
  std::vector<int> caps;
  std::vector<Subset> carrying;
  for (Subset block : components.blocks()) {
    caps.push_back(m.RankOf(block));
    if (block.Intersects(m.BaseUnion())) carrying.push_back(block);
  }
  return {{std::move(components), std::move(caps)},
          Partition(SetFamily(m.ground(), std::move(carrying)))};
}

const TheoremCheck* FindCheck(const std::vector<TheoremCheck>& registry,
                              std::string_view id) {
  for (const TheoremCheck& check : registry) {
    if (check.id == id) return &check;
  }
  return nullptr;
}

std::vector<TheoremCheck> SelectChecks(
    const std::vector<TheoremCheck>& registry,
    const std::vector<std::string>& ids) {
  std::vector<TheoremCheck> out;
  for (const std::string& id : ids) {
    const TheoremCheck* check = FindCheck(registry, id);
    if (check == nullptr) {
      throw std::invalid_argument("unknown check id '" + id + "'");
    }
    out.push_back(*check);
  }
  return out;
}

std::vector<TheoremCheck> TheoremRegistry(const RegistryOptions& options) {
  const std::size_t cap = options.search_cap;
  const ClassifierOptions minimality{.threads = 1, .search_cap = cap};
  auto any = [](const Matroid&) { return true; };
  auto searchable = [cap](const Matroid& m) {
    return m.bases().size() <= std::min<std::size_t>(cap, 63);
  };
  auto has_unique_blocks = [](const Matroid& m) {
    return SeedFor(m).unique_blocks.size() > 0;
  };

  std::vector<TheoremCheck> r;

  // Base family basics.
  AddCheck(
      r, "prop_100", "all bases have the same cardinality r(M)", any,
      [](const Matroid& m) {
        for (Subset b : m.bases()) {
          if (b.size() != m.rank()) {
            return Fail(Show(m, b) + " has size " + std::to_string(b.size()));
          }
        }
        return Pass();
      });
  AddCheck(r, "thm_123", "x in B1-B2 => some y in B2-B1 has (B2-y)+x a base",
           any, [](const Matroid& m) {
             for (Subset b1 : m.bases()) {
               for (Subset b2 : m.bases()) {
                 for (int x : (b1 - b2).Elements()) {
                   bool found = false;
                   ForEachElement(b2 - b1, [&](int y) {
                     found = found || m.IsBase(b2.Without(y).With(x));
                   });
                   if (!found) {
                     return Fail("B1=" + Show(m, b1) + " B2=" + Show(m, b2) +
                                 " x=" + m.ground().label(x));
                   }
                 }
               }
             }
             return Pass();
           });

  // Forming base families.
  AddCheck(r, "prop_341", "|F_M(B)| = r(M) for every base B", PositiveRank,
           [](const Matroid& m) {
             for (Subset b : m.bases()) {
               const SetFamily f = FormingBaseFamilyAt(m, b).family;
               if (static_cast<int>(f.size()) != m.rank()) {
                 return Fail("B=" + Show(m, b) + " F_M(B)=" + f.ToString());
               }
             }
             return Pass();
           });
  AddCheck(r, "cor_423", "|F(M)| >= r(M)", PositiveRank, [](const Matroid& m) {
    const SetFamily f = FormingBaseFamily(m).family;
    if (static_cast<int>(f.size()) < m.rank()) {
      return Fail("F(M)=" + f.ToString());
    }
    return Pass();
  });
  AddCheck(r, "prop_46", "union of F(M) = union of bases", PositiveRank,
           [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             if (f.Union() != m.BaseUnion()) {
               return Fail("F(M)=" + f.ToString());
             }
             return Pass();
           });
  AddCheck(r, "prop_124", "union of F_M(B) = union of bases for every base B",
           PositiveRank, [](const Matroid& m) {
             for (Subset b : m.bases()) {
               const SetFamily f = FormingBaseFamilyAt(m, b).family;
               if (f.Union() != m.BaseUnion()) {
                 return Fail("B=" + Show(m, b) + " F_M(B)=" + f.ToString());
               }
             }
             return Pass();
           });
  AddCheck(r, "lemma_e", "each b in B lies in exactly one block of F_M(B)",
           PositiveRank, [](const Matroid& m) {
             for (Subset b : m.bases()) {
               const SetFamily f = FormingBaseFamilyAt(m, b).family;
               for (int e : b.Elements()) {
                 int hits = 0;
                 for (Subset block : f) hits += block.contains(e) ? 1 : 0;
                 if (hits != 1) {
                   return Fail("B=" + Show(m, b) + " b=" + m.ground().label(e) +
                               " F_M(B)=" + f.ToString());
                 }
               }
             }
             return Pass();
           });
  AddCheck(
      r, "lemma_66", "r(M) = 1 => F_M(B) = {union of bases}",
      [](const Matroid& m) { return m.rank() == 1; },
      [](const Matroid& m) {
        const SetFamily expected(m.ground(), {m.BaseUnion()});
        for (Subset b : m.bases()) {
          const SetFamily f = FormingBaseFamilyAt(m, b).family;
          if (!(f == expected)) {
            return Fail("B=" + Show(m, b) + " F_M(B)=" + f.ToString());
          }
        }
        return Pass();
      });

  // Unique expansion matroids.
  AddCheck(r, "thm_50",
           "F(M) partitions the base union iff M is unique expansion",
           PositiveRank, [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             const bool partition = IsPartition(f, m.BaseUnion());
             const ClassificationResult ue = IsUniqueExpansion(m, kSerial);
             if (partition != ue.verdict) {
               return Fail("F(M)=" + f.ToString() +
                           " partition=" + VerdictWord(partition) +
                           " unique-expansion=" + VerdictText(m, ue));
             }
             return Pass();
           });
  AddCheck(r, "prop_h",
           "unique expansion => |B ∩ D| = 1 for all bases B, blocks D of F(M)",
           UniqueExpansion, [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             for (Subset b : m.bases()) {
               for (Subset d : f) {
                 if ((b & d).size() != 1) {
                   return Fail("B=" + Show(m, b) + " D=" + Show(m, d));
                 }
               }
             }
             return Pass();
           });
  AddCheck(r, "thm_126", "|F(M)| = r(M) iff M is unique expansion",
           PositiveRank, [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             const bool tight = static_cast<int>(f.size()) == m.rank();
             const ClassificationResult ue = IsUniqueExpansion(m, kSerial);
             if (tight != ue.verdict) {
               return Fail("|F(M)|=" + std::to_string(f.size()) +
                           " r=" + std::to_string(m.rank()) +
                           " unique-expansion=" + VerdictText(m, ue));
             }
             return Pass();
           });
  AddCheck(r, "prop_51_j",
           "unique expansion => (X is a base iff X ⊆ union of bases and "
           "|X ∩ D| = 1 for every D in F(M))",
           UniqueExpansion, [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             std::optional<Subset> bad;
             ForEachSubsetOf(m.ground().All(), [&](Subset x) {
               if (bad) return;
               const bool predicted =
                   x.IsSubsetOf(m.BaseUnion()) && MeetsEachOnce(x, f);
               if (predicted != m.IsBase(x)) bad = x;
             });
             if (bad) {
               return Fail("X=" + Show(m, *bad) +
                           " base=" + VerdictWord(m.IsBase(*bad)));
             }
             return Pass();
           });
  AddCheck(r, "prop_125", "unique expansion => bases = transversals of F(M)",
           UniqueExpansion, [](const Matroid& m) {
             const SetFamily f = FormingBaseFamily(m).family;
             const SetFamily product = Transversals(Partition(f));
             if (!(product == m.bases())) {
               return Fail("transversals=" + product.ToString());
             }
             return Pass();
           });

  // Partition matroid constructors, on seeds derived from each matroid.
  AddCheck(r, "prop_302_304",
           "M(P;k) and M_E(P) are matroids with the stated independent sets",
           any, [](const Matroid& m) {
             const ConstructionSeed seed = SeedFor(m);
             const GroundSet& e = m.ground();
             const Matroid pm = MakePartitionMatroid(e, seed.partition_matroid);
             const auto& blocks = seed.partition_matroid.blocks.blocks();
             const auto& caps = seed.partition_matroid.caps;
             std::optional<Subset> bad;
             ForEachSubsetOf(e.All(), [&](Subset x) {
               bool expected =
                   x.IsSubsetOf(seed.partition_matroid.blocks.support());
               for (std::size_t i = 0; i < blocks.size(); ++i) {
                 expected = expected && (x & blocks[i]).size() <= caps[i];
               }
               if (!bad && expected != pm.IsIndependent(x)) bad = x;
             });
             if (bad)
               return Fail("M(P;k) independence differs at " + Show(m, *bad));

             const Partition& p = seed.unique_blocks;
             const Matroid upm = MakeUniquePartitionMatroid(e, p);
             ForEachSubsetOf(e.All(), [&](Subset x) {
               bool expected = x.IsSubsetOf(p.support());
               for (Subset d : p.blocks()) {
                 expected = expected && (x & d).size() <= 1;
               }
               if (!bad && expected != upm.IsIndependent(x)) bad = x;
             });
             if (bad)
               return Fail("M_E(P) independence differs at " + Show(m, *bad));

             // Embedding: add the block E - ∪P with cap 0.
             const Subset outside = e.All() - p.support();
             if (!outside.empty()) {
               std::vector<Subset> q(p.blocks().begin(), p.blocks().end());
               q.push_back(outside);
               std::vector<int> q_caps;
               const SetFamily q_family(e, q);
               for (Subset block : q_family) {
                 q_caps.push_back(block == outside ? 0 : 1);
               }
               const Matroid embedded =
                   MakePartitionMatroid(e, {Partition(q_family), q_caps});
               if (!(embedded == upm)) {
                 return Fail("embedding differs: " + Show(embedded) + " vs " +
                             Show(upm));
               }
             }
             return Pass();
           });
  AddCheck(
      r, "prop_303", "B is a base of M(P;k) iff B ⊆ ∪P and |B ∩ P_i| = k_i",
      any, [](const Matroid& m) {
        const ConstructionSeed seed = SeedFor(m);
        const Matroid pm =
            MakePartitionMatroid(m.ground(), seed.partition_matroid);
        const auto& blocks = seed.partition_matroid.blocks.blocks();
        const auto& caps = seed.partition_matroid.caps;
        std::optional<Subset> bad;
        ForEachSubsetOf(m.ground().All(), [&](Subset x) {
          bool expected = x.IsSubsetOf(seed.partition_matroid.blocks.support());
          for (std::size_t i = 0; i < blocks.size(); ++i) {
            expected = expected && (x & blocks[i]).size() == caps[i];
          }
          if (!bad && expected != pm.IsBase(x)) bad = x;
        });
        if (bad) {
          return Fail("P=" + blocks.ToString() + " X=" + Show(m, *bad));
        }
        return Pass();
      });
  AddCheck(
      r, "prop_305",
      "B is a base of M_E(P) iff B ⊆ ∪P and |B ∩ K| = 1 for every block",
      has_unique_blocks, [](const Matroid& m) {
        const Partition p = SeedFor(m).unique_blocks;
        const Matroid upm = MakeUniquePartitionMatroid(m.ground(), p);
        std::optional<Subset> bad;
        ForEachSubsetOf(m.ground().All(), [&](Subset x) {
          const bool expected =
              x.IsSubsetOf(p.support()) && MeetsEachOnce(x, p.blocks());
          if (!bad && expected != upm.IsBase(x)) bad = x;
        });
        if (bad) {
          return Fail("P=" + p.blocks().ToString() + " X=" + Show(m, *bad));
        }
        return Pass();
      });
  AddCheck(r, "prop_306", "bases of M_E(P) = transversals of P",
           has_unique_blocks, [](const Matroid& m) {
             const Partition p = SeedFor(m).unique_blocks;
             const Matroid upm = MakeUniquePartitionMatroid(m.ground(), p);
             const SetFamily product = Transversals(p);
             if (!(upm.bases() == product)) {
               return Fail("P=" + p.blocks().ToString() + " bases=" +
                           Show(upm) + " transversals=" + product.ToString());
             }
             return Pass();
           });
  AddCheck(
      r, "prop_339",
      "B is a base of M_E(P)* iff E-∪P ⊆ B and |K - B| = 1 for every "
      "block",
      has_unique_blocks, [](const Matroid& m) {
        const Partition p = SeedFor(m).unique_blocks;
        const Matroid dual = MakeUniquePartitionMatroid(m.ground(), p).Dual();
        const Subset outside = m.ground().All() - p.support();
        std::optional<Subset> bad;
        ForEachSubsetOf(m.ground().All(), [&](Subset x) {
          bool expected = outside.IsSubsetOf(x);
          for (Subset k : p.blocks()) {
            expected = expected && (k - x).size() == 1;
          }
          if (!bad && expected != dual.IsBase(x)) bad = x;
        });
        if (bad) {
          return Fail("P=" + p.blocks().ToString() + " X=" + Show(m, *bad));
        }
        return Pass();
      });
  AddCheck(r, "cor_336", "union of bases of M_E(P) = ∪P", has_unique_blocks,
           [](const Matroid& m) {
             const Partition p = SeedFor(m).unique_blocks;
             const Matroid upm = MakeUniquePartitionMatroid(m.ground(), p);
             if (upm.BaseUnion() != p.support()) {
               return Fail("P=" + p.blocks().ToString() +
                           " union=" + Show(m, upm.BaseUnion()));
             }
             return Pass();
           });
  AddCheck(r, "thm_321", "F(M_E(P)) = P", has_unique_blocks,
           [](const Matroid& m) {
             const Partition p = SeedFor(m).unique_blocks;
             const Matroid upm = MakeUniquePartitionMatroid(m.ground(), p);
             const SetFamily f = FormingBaseFamily(upm).family;
             if (!(f == p.blocks())) {
               return Fail("P=" + p.blocks().ToString() + " F=" + f.ToString());
             }
             return Pass();
           });
  AddCheck(r, "thm_52",
           "M is unique expansion iff M is a unique partition matroid",
           PositiveRank, [](const Matroid& m) {
             const ClassificationResult ue = IsUniqueExpansion(m, kSerial);
             const Matroid rebuilt =
                 MakeUniquePartitionMatroid(m.ground(), ParallelClasses(m));
             const bool is_upm = rebuilt == m;
             if (ue.verdict != is_upm) {
               return Fail("unique-expansion=" + VerdictText(m, ue) +
                           " unique-partition=" + VerdictWord(is_upm));
             }
             if (ue.verdict) {
               const Partition f(FormingBaseFamily(m).family);
               if (!(MakeUniquePartitionMatroid(m.ground(), f) == m)) {
                 return Fail("M_E(F(M)) differs from M");
               }
             }
             return Pass();
           });

  // Transversal structure over every partition of the base union.
  AddCheck(
      r, "thm_33",
      "for a partition P of the base union: every base meets every "
      "block once iff bases = transversals of P",
      any, [](const Matroid& m) {
        for (const Partition& p : AllPartitions(m.ground(), m.BaseUnion())) {
          const bool once = MeetsEveryBlockOnce(m, p.blocks());
          const bool product = Transversals(p) == m.bases();
          if (once != product) {
            return Fail("P=" + p.blocks().ToString() +
                        " meets-once=" + VerdictWord(once) +
                        " equals-product=" + VerdictWord(product));
          }
        }
        return Pass();
      });
  AddCheck(
      r, "cor_109", "every base meets every block of P once => |bases| = Co(P)",
      any, [](const Matroid& m) {
        for (const Partition& p : AllPartitions(m.ground(), m.BaseUnion())) {
          if (MeetsEveryBlockOnce(m, p.blocks()) &&
              m.bases().size() != CombinationNumber(p)) {
            return Fail("P=" + p.blocks().ToString() +
                        " Co(P)=" + std::to_string(CombinationNumber(p)));
          }
        }
        return Pass();
      });
  AddCheck(
      r, "prop_103",
      "at most one partition of the base union is met once by every "
      "base, and it is the recovered F(M)",
      PositiveRank, [](const Matroid& m) {
        std::vector<Partition> hits;
        for (const Partition& p : AllPartitions(m.ground(), m.BaseUnion())) {
          if (MeetsEveryBlockOnce(m, p.blocks())) hits.push_back(p);
        }
        if (hits.size() > 1) {
          return Fail("two partitions: " + hits[0].blocks().ToString() +
                      " and " + hits[1].blocks().ToString());
        }
        const std::optional<Partition> recovered = RecoverPartition(m);
        if (hits.empty() != !recovered.has_value()) {
          return Fail("search found " + std::to_string(hits.size()) +
                      " partition(s), recovery " +
                      (recovered ? recovered->blocks().ToString()
                                 : std::string("none")));
        }
        if (recovered &&
            !(hits[0] == *recovered && IsTransversalOf(m, *recovered))) {
          return Fail("search " + hits[0].blocks().ToString() +
                      " vs recovered " + recovered->blocks().ToString());
        }
        return Pass();
      });

  // Minimality and duality.
  AddCheck(
      r, "thm_334",
      "M is union minimal iff M* is intersection minimal (with M** = M "
      "and r(M) + r(M*) = |E|)",
      searchable, [minimality](const Matroid& m) {
        const Matroid dual = m.Dual();
        if (!(dual.Dual() == m)) {
          return Fail("M** = " + Show(dual.Dual()));
        }
        if (m.rank() + dual.rank() != m.ground().size()) {
          return Fail("r(M*) = " + std::to_string(dual.rank()));
        }
        const ClassificationResult um = IsUnionMinimal(m, minimality);
        const ClassificationResult im = IsIntersectionMinimal(dual, minimality);
        if (um.verdict != im.verdict) {
          return Fail("union-minimal=" + VerdictText(m, um) +
                      " dual intersection-minimal=" + VerdictText(dual, im));
        }
        return Pass();
      });
  AddCheck(
      r, "thm_552", "unique expansion => union minimal",
      [searchable](const Matroid& m) {
        return searchable(m) && UniqueExpansion(m);
      },
      [minimality](const Matroid& m) {
        const ClassificationResult um = IsUnionMinimal(m, minimality);
        if (!um.verdict) return Fail(VerdictText(m, um));
        return Pass();
      });
  AddCheck(r, "prop_118", "unique expansion => unique exchange",
           UniqueExpansion, [](const Matroid& m) {
             const ClassificationResult ux = IsUniqueExchange(m, kSerial);
             if (!ux.verdict) return Fail(VerdictText(m, ux));
             return Pass();
           });
  AddCheck(r, "thm_120", "unique expansion => M* is unique exchange",
           UniqueExpansion, [](const Matroid& m) {
             const Matroid dual = m.Dual();
             const ClassificationResult ux = IsUniqueExchange(dual, kSerial);
             if (!ux.verdict)
               return Fail("M*=" + Show(dual) + " " + VerdictText(dual, ux));
             return Pass();
           });
  return r;
}

}  // namespace matroidlab
