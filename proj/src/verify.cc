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

#include <chrono>
#include <exception>
#include <sstream>

#include "json.hpp"
#include "matroidlab/enumeration.h"
#include "matroidlab/harness.h"
#include "matroidlab/parallel.h"

namespace matroidlab {
namespace {

enum class Status : unsigned char { kSkipped, kPassed, kFailed };

struct Cell {
  Status status = Status::kSkipped;
  std::string witness;
};

// Exceptions never escape: a throwing predicate or checker is a failure.
Cell Evaluate(const TheoremCheck& check, const Matroid& m) {
  try {
    if (!check.applies(m)) return {};
    CheckOutcome outcome = check.run(m);
    if (outcome.passed) return {Status::kPassed, {}};
    return {Status::kFailed, std::move(outcome.witness)};
  } catch (const std::exception& e) {
    return {Status::kFailed, std::string("exception: ") + e.what()};
  }
}

PopulationSummary Summarize(std::span<const Matroid> population,
                            bool count_classes, int threads) {
  PopulationSummary summary;
  summary.total = population.size();
  std::map<int, std::vector<Matroid>> by_size;
  for (const Matroid& m : population) {
    ++summary.counts[m.ground().size()][m.rank()];
    if (count_classes && m.ground().size() <= 8) {
      by_size[m.ground().size()].push_back(m);
    }
  }
  for (const auto& [size, members] : by_size) {
    summary.isomorphism_classes[size] =
        CountIsomorphismClasses(members, threads);
  }
  return summary;
}

VerificationReport Assemble(std::span<const Matroid> population,
                            const std::vector<TheoremCheck>& registry,
                            const std::vector<Cell>& cells,
                            const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t width = registry.size();
  for (std::size_t c = 0; c < width; ++c) {
    CheckTally tally;
    tally.id = registry[c].id;
    tally.statement = registry[c].statement;
    for (std::size_t i = 0; i < population.size(); ++i) {
      const Cell& cell = cells[i * width + c];
      switch (cell.status) {
        case Status::kSkipped:
          ++tally.skipped;
          break;
        case Status::kPassed:
          ++tally.applicable;
          ++tally.passed;
          break;
        case Status::kFailed:
          ++tally.applicable;
          ++tally.failed;
          if (tally.witnesses.size() < options.max_witnesses) {
            tally.witnesses.push_back(
                "n=" + std::to_string(population[i].ground().size()) +
                " bases=" + population[i].bases().ToString() + ": " +
                cell.witness);
          }
          break;
      }
    }
    report.checks.push_back(std::move(tally));
  }
  return report;
}

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::size_t VerificationReport::failures() const {
  std::size_t total = 0;
  for (const CheckTally& t : checks) total += t.failed;
  return total;
}

VerificationReport Verify(std::span<const Matroid> population,
                          const std::vector<TheoremCheck>& registry,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t width = registry.size();
  std::vector<Cell> cells(population.size() * width);
  const long count = static_cast<long>(population.size());
#pragma omp parallel for schedule(dynamic, 4) \
    num_threads(ResolveThreads(options.threads))
  for (long i = 0; i < count; ++i) {
    for (std::size_t c = 0; c < width; ++c) {
      cells[i * width + c] = Evaluate(registry[c], population[i]);
    }
  }
  VerificationReport report = Assemble(population, registry, cells, options);
  report.population =
      Summarize(population, options.count_isomorphism_classes, options.threads);
  report.duration_ms = MillisecondsSince(start);
  return report;
}

VerificationReport VerifySerial(std::span<const Matroid> population,
                                const std::vector<TheoremCheck>& registry,
                                const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t width = registry.size();
  std::vector<Cell> cells;
  cells.reserve(population.size() * width);
  for (const Matroid& m : population) {
    for (const TheoremCheck& check : registry) {
      cells.push_back(Evaluate(check, m));
    }
  }
  VerificationReport report = Assemble(population, registry, cells, options);
  report.population =
      Summarize(population, options.count_isomorphism_classes, 1);
  report.duration_ms = MillisecondsSince(start);
  return report;
}

std::string FormatReport(const VerificationReport& report) {
  std::ostringstream out;
  out << "population: " << report.population.total << " matroids\n";
  for (const auto& [size, by_rank] : report.population.counts) {
    std::size_t total = 0;
    for (const auto& [rank, n] : by_rank) total += n;
    out << "  n=" << size << ": " << total << " labelled";
    if (auto it = report.population.isomorphism_classes.find(size);
        it != report.population.isomorphism_classes.end()) {
      out << ", " << it->second << " up to isomorphism";
    }
    out << " (by rank:";
    for (const auto& [rank, n] : by_rank) out << " r" << rank << "=" << n;
    out << ")\n";
  }
  for (const CheckTally& t : report.checks) {
    out << (t.failed == 0 ? "PASS " : "FAIL ") << t.id << ": applicable "
        << t.applicable << ", passed " << t.passed << ", failed " << t.failed
        << ", skipped " << t.skipped << "\n";
    for (const std::string& w : t.witnesses) out << "    " << w << "\n";
  }
  out << (report.passed() ? "all checks passed" : "some checks failed")
      << " in " << static_cast<long>(report.duration_ms) << " ms\n";
  return out.str();
}

std::string ReportToJson(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json population;
  population["total"] = report.population.total;
  ordered_json sizes = ordered_json::array();
  for (const auto& [size, by_rank] : report.population.counts) {
    ordered_json entry;
    entry["n"] = size;
    std::size_t total = 0;
    ordered_json ranks = ordered_json::object();
    for (const auto& [rank, n] : by_rank) {
      ranks[std::to_string(rank)] = n;
      total += n;
    }
    entry["labelled"] = total;
    if (auto it = report.population.isomorphism_classes.find(size);
        it != report.population.isomorphism_classes.end()) {
      entry["isomorphism_classes"] = it->second;
    }
    entry["by_rank"] = std::move(ranks);
    sizes.push_back(std::move(entry));
  }
  population["sizes"] = std::move(sizes);

  ordered_json checks = ordered_json::array();
  for (const CheckTally& t : report.checks) {
    ordered_json c;
    c["id"] = t.id;
    c["paper_ref"] = t.statement;
    c["applicable"] = t.applicable;
    c["passed"] = t.passed;
    c["failed"] = t.failed;
    c["skipped"] = t.skipped;
    c["witnesses"] = t.witnesses;
    checks.push_back(std::move(c));
  }
  ordered_json doc;
  doc["population"] = std::move(population);
  doc["checks"] = std::move(checks);
  doc["duration_ms"] = report.duration_ms;
  return doc.dump(2);
}

}  // namespace matroidlab
