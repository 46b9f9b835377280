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

#include <algorithm>

#include "matroidlab/forming.h"
#include "matroidlab/harness.h"

namespace matroidlab {
namespace {

using Labels = std::vector<std::vector<std::string>>;

SetFamily Family(const GroundSet& ground, const Labels& sets) {
  std::vector<Subset> members;
  for (const auto& s : sets) members.push_back(ground.SubsetOf(s));
  return SetFamily(ground, std::move(members));
}

Matroid Bases(int n, const Labels& sets) {
  return Matroid::FromBases(Family(GroundSet::Numbered(n), sets));
}

Matroid LowOf(int n, const Labels& sets) {
  return Matroid::FromIndependents(Low(Family(GroundSet::Numbered(n), sets)));
}

Subset Set(const Matroid& m, std::initializer_list<std::string_view> labels) {
  return m.ground().SubsetOf(labels);
}

int Element(const Matroid& m, std::string_view label) {
  return *m.ground().IndexOf(label);
}

bool Forms(const Matroid& m, const Labels& expected) {
  return FormingBaseFamily(m).family == Family(m.ground(), expected);
}

bool Verdict(const ClassificationResult& r) { return r.verdict; }

// The returned witness is the canonically least one, so it is pinned here.
bool HasWitness(const ClassificationResult& r, const Witness& expected) {
  return !r.verdict && r.witness && *r.witness == expected;
}

}  // namespace

std::vector<WorkedExample> WorkedExamples() {
  std::vector<WorkedExample> out;

  {
    const Matroid m1 = LowOf(3, {{"1", "2"}, {"1", "3"}});
    const Matroid m2 = LowOf(3, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    out.push_back(
        {"forming_family_size",
         "|F(M)| equals r(M) for a unique expansion matroid and exceeds it "
         "for U(2,3)",
         {m1, m2},
         {{"F(M1) = {{1},{2,3}}",
           [=] { return Forms(m1, {{"1"}, {"2", "3"}}); }},
          {"|F(M1)| = r(M1) = 2",
           [=] {
             return FormingBaseFamily(m1).family.size() == 2 && m1.rank() == 2;
           }},
          {"F(M2) = {{1,2},{1,3},{2,3}}",
           [=] { return Forms(m2, {{"1", "2"}, {"1", "3"}, {"2", "3"}}); }},
          {"|F(M2)| = 3 > r(M2) = 2", [=] {
             return FormingBaseFamily(m2).family.size() == 3 && m2.rank() == 2;
           }}}});
  }
  {
    const Matroid u23 = Bases(3, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    out.push_back({"forming_family_covering",
                   "F(U(2,3)) covers the base union without partitioning it",
                   {u23},
                   {{"F(M) covers {1,2,3}",
                     [=] {
                       return IsCovering(FormingBaseFamily(u23).family,
                                         u23.BaseUnion());
                     }},
                    {"F(M) is not a partition of {1,2,3}", [=] {
                       return !IsPartition(FormingBaseFamily(u23).family,
                                           u23.BaseUnion());
                     }}}});
    out.push_back(
        {"two_expansions",
         "secondary base {1} extends to a base by both 2 and 3 from {2,3}",
         {u23},
         {{"M is not unique expansion",
           [=] { return !Verdict(IsUniqueExpansion(u23)); }},
          {"witness A={1}, B={2,3}, e1=2, e2=3", [=] {
             return HasWitness(
                 IsUniqueExpansion(u23),
                 ExpansionWitness{Set(u23, {"1"}), Set(u23, {"2", "3"}),
                                  Element(u23, "2"), Element(u23, "3")});
           }}}});
  }
  {
    const Matroid m = LowOf(3, {{"1", "2"}, {"1", "3"}});
    out.push_back({"unique_expansion",
                   "bases {{1,2},{1,3}} form a unique expansion matroid",
                   {m},
                   {{"M is unique expansion",
                     [=] { return Verdict(IsUniqueExpansion(m)); }}}});
  }
  {
    const Matroid m1 = LowOf(3, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    const Matroid m2 = LowOf(3, {{"1", "2"}, {"1", "3"}});
    out.push_back(
        {"union_minimal_shrink",
         "dropping {2,3} from U(2,3) keeps the union; the result cannot shrink "
         "further",
         {m1, m2},
         {{"M1 is not union minimal, witness {{1,2},{1,3}}",
           [=] {
             return HasWitness(IsUnionMinimal(m1),
                               SubfamilyWitness{m2.bases(), Preserved::kUnion});
           }},
          {"union of bases agrees",
           [=] { return m1.BaseUnion() == m2.BaseUnion(); }},
          {"M2 is union minimal",
           [=] { return Verdict(IsUnionMinimal(m2)); }}}});
  }
  {
    const Matroid m1 = LowOf(5, {{"1", "2"}, {"1", "3"}, {"1", "4"}});
    const Matroid m2 =
        LowOf(5, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
    out.push_back(
        {"union_minimal_nonisomorphic",
         "two union minimal matroids of equal rank and base union that are "
         "not isomorphic",
         {m1, m2},
         {{"both union minimal",
           [=] {
             return Verdict(IsUnionMinimal(m1)) && Verdict(IsUnionMinimal(m2));
           }},
          {"base unions are {1,2,3,4}",
           [=] {
             return m1.BaseUnion() == Set(m1, {"1", "2", "3", "4"}) &&
                    m2.BaseUnion() == Set(m2, {"1", "2", "3", "4"});
           }},
          {"both rank 2", [=] { return m1.rank() == 2 && m2.rank() == 2; }},
          {"base intersections {1} and {}",
           [=] {
             return m1.BaseIntersection() == Set(m1, {"1"}) &&
                    m2.BaseIntersection().empty();
           }},
          {"not isomorphic", [=] { return !AreIsomorphic(m1, m2); }}}});
  }
  {
    const Matroid m1 = LowOf(5, {{"2", "3"}, {"2", "4"}, {"3", "4"}});
    const Matroid m2 =
        LowOf(5, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
    out.push_back(
        {"intersection_minimal_nonisomorphic",
         "two intersection minimal matroids of equal rank and base "
         "intersection that are not isomorphic",
         {m1, m2},
         {{"both intersection minimal",
           [=] {
             return Verdict(IsIntersectionMinimal(m1)) &&
                    Verdict(IsIntersectionMinimal(m2));
           }},
          {"base intersections are empty",
           [=] {
             return m1.BaseIntersection().empty() &&
                    m2.BaseIntersection().empty();
           }},
          {"both rank 2", [=] { return m1.rank() == 2 && m2.rank() == 2; }},
          {"base unions {2,3,4} and {1,2,3,4}",
           [=] {
             return m1.BaseUnion() == Set(m1, {"2", "3", "4"}) &&
                    m2.BaseUnion() == Set(m2, {"1", "2", "3", "4"});
           }},
          {"not isomorphic", [=] { return !AreIsomorphic(m1, m2); }}}});
  }
  {
    const Matroid m = LowOf(5, {{"1", "2", "3"},
                                {"1", "2", "4"},
                                {"1", "3", "4"},
                                {"1", "2", "5"},
                                {"1", "4", "5"}});
    out.push_back({"two_exchanges",
                   "x=3 in {1,2,3} is replaceable by both 4 and 5 from {1,4,5}",
                   {m},
                   {{"rank 3 with five bases",
                     [=] { return m.rank() == 3 && m.bases().size() == 5; }},
                    {"M is not unique exchange",
                     [=] { return !Verdict(IsUniqueExchange(m)); }},
                    {"witness B1={1,2,3}, B2={1,4,5}, x=3, y1=4, y2=5", [=] {
                       return HasWitness(
                           IsUniqueExchange(m),
                           ExchangeWitness{Set(m, {"1", "2", "3"}),
                                           Set(m, {"1", "4", "5"}),
                                           Element(m, "3"), Element(m, "4"),
                                           Element(m, "5")});
                     }}}});
  }
  {
    const Matroid m =
        LowOf(4, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}});
    out.push_back(
        {"exchange_without_expansion",
         "unique exchange does not imply unique expansion",
         {m},
         {{"M is unique exchange",
           [=] { return Verdict(IsUniqueExchange(m)); }},
          {"M is not unique expansion, witness A={1,2}, B={1,3,4}, e1=3, e2=4",
           [=] {
             return HasWitness(
                 IsUniqueExpansion(m),
                 ExpansionWitness{Set(m, {"1", "2"}), Set(m, {"1", "3", "4"}),
                                  Element(m, "3"), Element(m, "4")});
           }}}});
  }
  {
    const Matroid m = LowOf(4, {{"1", "2"}, {"1", "3"}, {"1", "4"}});
    const Matroid dual = m.Dual();
    out.push_back({"dual_exchange_without_expansion",
                   "M* unique exchange does not make M* unique expansion",
                   {m, dual},
                   {{"M is unique exchange",
                     [=] { return Verdict(IsUniqueExchange(m)); }},
                    {"M* has bases {{2,3},{2,4},{3,4}}",
                     [=] {
                       return dual.bases() ==
                              Family(m.ground(),
                                     {{"2", "3"}, {"2", "4"}, {"3", "4"}});
                     }},
                    {"M* is unique exchange",
                     [=] { return Verdict(IsUniqueExchange(dual)); }},
                    {"M* is not unique expansion",
                     [=] { return !Verdict(IsUniqueExpansion(dual)); }}}});
  }
  return out;
}

std::vector<Matroid> WorkedExampleMatroids() {
  std::vector<Matroid> out;
  for (const WorkedExample& example : WorkedExamples()) {
    for (const Matroid& m : example.matroids) {
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

}  // namespace matroidlab
