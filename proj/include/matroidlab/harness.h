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

// Registry-driven verification of structural theorems over a population of
// matroids.
//
// Each TheoremCheck pairs an applicability predicate (the theorem's
// hypotheses) with a deterministic checker. Verify runs every applicable
// check on every matroid and tallies the outcome; matroids failing the
// hypotheses are counted as skipped, never as passed.

#ifndef MATROIDLAB_HARNESS_H_
#define MATROIDLAB_HARNESS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/classifiers.h"
#include "matroidlab/matroid.h"

namespace matroidlab {

struct CheckOutcome {
  bool passed = true;
  // Human-readable counterexample when !passed.
  std::string witness;
};

struct TheoremCheck {
  std::string id;
  // Short statement of the property being checked.
  std::string statement;
  std::function<bool(const Matroid&)> applies;
  std::function<CheckOutcome(const Matroid&)> run;
};

struct RegistryOptions {
  // Minimality checks skip matroids with more bases than this.
  std::size_t search_cap = kDefaultSearchCap;
};

// The fixed list of 28 checks, in a stable order.
std::vector<TheoremCheck> TheoremRegistry(const RegistryOptions& options = {});

// nullptr when no check has that id.
const TheoremCheck* FindCheck(const std::vector<TheoremCheck>& registry,
                              std::string_view id);

// Subset of `registry` in the order of `ids`. Throws std::invalid_argument
// naming the first unknown id.
std::vector<TheoremCheck> SelectChecks(
    const std::vector<TheoremCheck>& registry,
    const std::vector<std::string>& ids);

// Partition seeds derived from a matroid for the constructor checks: the
// connected components of M as blocks with caps r(component), and the
// components that carry a non-loop element as unique-partition blocks.
struct ConstructionSeed {
  PartitionMatroidSpec partition_matroid;
  Partition unique_blocks;
};
ConstructionSeed SeedFor(const Matroid& m);

// Parallel classes of the non-loop elements; a partition of the base union.
Partition ParallelClasses(const Matroid& m);

struct CheckTally {
  std::string id;
  std::string statement;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> witnesses;
};

struct PopulationSummary {
  std::size_t total = 0;
  // ground size -> rank -> count
  std::map<int, std::map<int, std::size_t>> counts;
  // ground size -> number of isomorphism classes (sizes <= 8 only)
  std::map<int, std::size_t> isomorphism_classes;
};

struct VerificationReport {
  PopulationSummary population;
  std::vector<CheckTally> checks;
  double duration_ms = 0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  // 0 = OpenMP default.
  int threads = 0;
  // Witnesses kept per check, lowest population index first.
  std::size_t max_witnesses = 5;
  bool count_isomorphism_classes = true;
};

// Parallel over the population; tallies and witnesses do not depend on the
// thread count.
VerificationReport Verify(std::span<const Matroid> population,
                          const std::vector<TheoremCheck>& registry,
                          const VerifyOptions& options = {});

// Single-threaded reference.
VerificationReport VerifySerial(std::span<const Matroid> population,
                                const std::vector<TheoremCheck>& registry,
                                const VerifyOptions& options = {});

std::string FormatReport(const VerificationReport& report);
// {population: {...}, checks: [{id, paper_ref, applicable, passed, failed,
//  skipped, witnesses}], duration_ms}
std::string ReportToJson(const VerificationReport& report);

// Worked examples with machine-checkable facts.
struct ExpectedFact {
  std::string description;
  std::function<bool()> holds;
};

struct WorkedExample {
  std::string id;
  std::string summary;
  std::vector<Matroid> matroids;
  std::vector<ExpectedFact> facts;
};

std::vector<WorkedExample> WorkedExamples();
// All matroids of WorkedExamples(), deduplicated, in canonical order.
std::vector<Matroid> WorkedExampleMatroids();

}  // namespace matroidlab

#endif  // MATROIDLAB_HARNESS_H_
