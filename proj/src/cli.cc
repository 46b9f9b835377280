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

#include "matroidlab/cli.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidlab/classifiers.h"
#include "matroidlab/document.h"
#include "matroidlab/enumeration.h"
#include "matroidlab/forming.h"
#include "matroidlab/harness.h"

namespace matroidlab {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t SearchCap() {
  const char* value = std::getenv("MATROIDLAB_SEARCH_CAP");
  if (value == nullptr || *value == '\0') return kDefaultSearchCap;
  std::size_t pos = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || value[pos] != '\0') {
    throw UsageError(std::string("MATROIDLAB_SEARCH_CAP must be a "
                                 "non-negative integer, got '") +
                     value + "'");
  }
  return static_cast<std::size_t>(cap);
}

ordered_json SetsJson(const SetFamily& family) {
  ordered_json out = ordered_json::array();
  for (Subset s : family) {
    ordered_json labels = ordered_json::array();
    for (int e : s.Elements()) labels.push_back(family.ground().label(e));
    out.push_back(std::move(labels));
  }
  return out;
}

ordered_json SetJson(const GroundSet& ground, Subset s) {
  ordered_json labels = ordered_json::array();
  for (int e : s.Elements()) labels.push_back(ground.label(e));
  return labels;
}

std::string YesNo(bool v) { return v ? "YES" : "NO"; }

struct Verdict {
  std::string name;
  std::optional<ClassificationResult> result;
  // Why the result is absent.
  std::string notice;
};

void EmitVerdicts(const Matroid& m, const std::vector<Verdict>& verdicts,
                  bool as_json, ordered_json& doc, std::ostream& out) {
  for (const Verdict& v : verdicts) {
    if (as_json) {
      ordered_json entry;
      if (v.result) {
        entry["verdict"] = v.result->verdict;
        if (v.result->witness) {
          entry["witness"] = DescribeWitness(m.ground(), *v.result->witness);
        }
      } else {
        entry["verdict"] = nullptr;
        entry["notice"] = v.notice;
      }
      doc[v.name] = std::move(entry);
    } else if (v.result) {
      out << v.name << ": " << YesNo(v.result->verdict);
      if (v.result->witness) {
        out << " (" << DescribeWitness(m.ground(), *v.result->witness) << ")";
      }
      out << "\n";
    } else {
      out << v.name << ": skipped (" << v.notice << ")\n";
    }
  }
}

int Analyze(const std::string& path, bool as_json, std::ostream& out) {
  const Matroid m = ParseMatroidFile(path);
  const ClassifierOptions options{.search_cap = SearchCap()};
  std::vector<Verdict> verdicts;
  std::optional<SetFamily> forming;
  if (m.rank() > 0) {
    forming = FormingBaseFamily(m).family;
    verdicts.push_back({"unique-expansion", IsUniqueExpansion(m, options), ""});
  } else {
    verdicts.push_back(
        {"unique-expansion", std::nullopt, "rank 0 has no secondary bases"});
  }
  verdicts.push_back({"unique-exchange", IsUniqueExchange(m, options), ""});
  const std::size_t cap = std::min<std::size_t>(options.search_cap, 63);
  if (m.bases().size() <= cap) {
    verdicts.push_back({"union-minimal", IsUnionMinimal(m, options), ""});
    verdicts.push_back(
        {"intersection-minimal", IsIntersectionMinimal(m, options), ""});
  } else {
    const std::string notice = std::to_string(m.bases().size()) +
                               " bases exceed the search cap of " +
                               std::to_string(cap);
    verdicts.push_back({"union-minimal", std::nullopt, notice});
    verdicts.push_back({"intersection-minimal", std::nullopt, notice});
  }

  if (as_json) {
    ordered_json doc;
    doc["ground_set"] = m.ground().labels();
    doc["bases"] = SetsJson(m.bases());
    doc["rank"] = m.rank();
    doc["forming_family"] =
        forming ? SetsJson(*forming) : ordered_json(nullptr);
    EmitVerdicts(m, verdicts, true, doc, out);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  ordered_json unused;
  out << "ground set: " << m.ground().Format(m.ground().All()) << "\n"
      << "bases: " << m.bases().ToString() << "\n"
      << "rank: " << m.rank() << "\n"
      << "F(M): " << (forming ? forming->ToString() : "undefined (rank 0)")
      << "\n";
  EmitVerdicts(m, verdicts, false, unused, out);
  return kExitOk;
}

int Forming(const std::string& path, bool as_json, std::ostream& out) {
  const Matroid m = ParseMatroidFile(path);
  const SetFamily secondary = SecondaryBases(m);
  const SetFamily forming = FormingBaseFamily(m).family;
  if (as_json) {
    ordered_json doc;
    doc["secondary_bases"] = SetsJson(secondary);
    doc["forming_family"] = SetsJson(forming);
    ordered_json per_base = ordered_json::array();
    for (Subset b : m.bases()) {
      ordered_json entry;
      entry["base"] = SetJson(m.ground(), b);
      entry["forming_family"] = SetsJson(FormingBaseFamilyAt(m, b).family);
      per_base.push_back(std::move(entry));
    }
    doc["per_base"] = std::move(per_base);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "s(M): " << secondary.ToString() << "\n"
      << "F(M): " << forming.ToString() << "\n";
  for (Subset b : m.bases()) {
    out << "F_M(" << m.ground().Format(b)
        << "): " << FormingBaseFamilyAt(m, b).family.ToString() << "\n";
  }
  return kExitOk;
}

std::vector<std::string> SplitLabels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty label in '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty label list");
  return out;
}

// Blocks paired with their caps, in canonical block order.
std::pair<Partition, std::vector<int>> BlocksWithCaps(
    const GroundSet& ground, const std::vector<std::string>& specs,
    const std::vector<int>& caps) {
  std::vector<std::pair<Subset, int>> pairs;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Subset block = ground.SubsetOf(SplitLabels(specs[i]));
    for (const auto& [existing, cap] : pairs) {
      if (existing.Intersects(block)) {
        throw MatroidError(ErrorCode::kInvalidPartition,
                           "blocks " + ground.Format(existing) + " and " +
                               ground.Format(block) + " overlap");
      }
    }
    pairs.emplace_back(block, i < caps.size() ? caps[i] : 1);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Subset> blocks;
  std::vector<int> sorted_caps;
  for (const auto& [block, cap] : pairs) {
    blocks.push_back(block);
    sorted_caps.push_back(cap);
  }
  return {Partition(SetFamily(ground, std::move(blocks))),
          std::move(sorted_caps)};
}

int MakeUpm(const std::string& ground_spec,
            const std::vector<std::string>& blocks, std::ostream& out) {
  const GroundSet ground(SplitLabels(ground_spec));
  auto [partition, caps] = BlocksWithCaps(ground, blocks, {});
  out << SerializeDocument(
             ToDocument(MakeUniquePartitionMatroid(ground, partition)))
      << "\n";
  return kExitOk;
}

int MakePm(const std::string& ground_spec,
           const std::vector<std::string>& blocks, const std::vector<int>& caps,
           std::ostream& out) {
  if (caps.size() != blocks.size()) {
    throw MatroidError(ErrorCode::kCapOutOfRange,
                       std::to_string(blocks.size()) + " blocks but " +
                           std::to_string(caps.size()) + " caps");
  }
  const GroundSet ground(SplitLabels(ground_spec));
  auto [partition, sorted_caps] = BlocksWithCaps(ground, blocks, caps);
  out << SerializeDocument(ToDocument(MakePartitionMatroid(
             ground, {std::move(partition), std::move(sorted_caps)})))
      << "\n";
  return kExitOk;
}

int Enumerate(int n, std::optional<int> rank, bool count_only, bool as_json,
              int threads, std::ostream& out) {
  const std::vector<Matroid> all = EnumerateMatroids(n, rank, threads);
  if (count_only) {
    const std::size_t classes = CountIsomorphismClasses(all, threads);
    if (as_json) {
      ordered_json doc;
      doc["n"] = n;
      doc["rank"] = rank ? ordered_json(*rank) : ordered_json(nullptr);
      doc["labelled"] = all.size();
      doc["isomorphism_classes"] = classes;
      out << doc.dump() << "\n";
    } else {
      out << all.size() << " labelled matroids, " << classes
          << " up to isomorphism\n";
    }
    return kExitOk;
  }
  for (const Matroid& m : all) {
    if (as_json) {
      out << SerializeDocument(ToDocument(m)) << "\n";
    } else {
      out << "r=" << m.rank() << " " << m.bases().ToString() << "\n";
    }
  }
  return kExitOk;
}

int RunVerify(int n, const std::vector<std::string>& ids, bool examples,
              bool as_json, int threads, std::ostream& out) {
  std::vector<TheoremCheck> registry =
      TheoremRegistry({.search_cap = SearchCap()});
  if (!ids.empty()) registry = SelectChecks(registry, ids);

  std::vector<Matroid> population;
  std::vector<std::string> failed_facts;
  std::size_t fact_count = 0;
  if (examples) {
    population = WorkedExampleMatroids();
    for (const WorkedExample& example : WorkedExamples()) {
      for (const ExpectedFact& fact : example.facts) {
        ++fact_count;
        bool holds = false;
        try {
          holds = fact.holds();
        } catch (const std::exception&) {
          holds = false;
        }
        if (!holds)
          failed_facts.push_back(example.id + ": " + fact.description);
      }
    }
  } else {
    population = EnumerateUpTo(n, threads);
  }

  const VerificationReport report =
      Verify(population, registry, {.threads = threads});
  if (as_json) {
    if (examples) {
      ordered_json doc = ordered_json::parse(ReportToJson(report));
      doc["facts"] = {{"total", fact_count}, {"failed", failed_facts}};
      out << doc.dump(2) << "\n";
    } else {
      out << ReportToJson(report) << "\n";
    }
  } else {
    out << FormatReport(report);
    if (examples) {
      out << "worked-example facts: " << fact_count - failed_facts.size() << "/"
          << fact_count << " hold\n";
      for (const std::string& f : failed_facts) out << "  FAILED " << f << "\n";
    }
  }
  return report.passed() && failed_facts.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Finite matroid workbench", "matroidlab"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  int threads = 0;

  auto* analyze =
      app.add_subcommand("analyze", "Rank, F(M) and class verdicts");
  analyze->add_option("file", file, "Matroid JSON document")->required();
  analyze->add_flag("--json", as_json, "Machine-readable output");

  auto* dual = app.add_subcommand("dual", "Emit the dual matroid");
  dual->add_option("file", file, "Matroid JSON document")->required();
  dual->add_flag("--json", as_json, "Accepted; output is always JSON");

  auto* forming = app.add_subcommand("forming", "s(M), F(M) and F_M(B)");
  forming->add_option("file", file, "Matroid JSON document")->required();
  forming->add_flag("--json", as_json, "Machine-readable output");

  std::string ground;
  std::vector<std::string> blocks;
  std::vector<int> caps;
  auto* upm =
      app.add_subcommand("make-upm", "Emit the unique partition matroid");
  upm->add_option("--ground", ground, "Comma-separated labels")->required();
  upm->add_option("--block", blocks, "Comma-separated block (repeatable)")
      ->take_all();
  upm->add_flag("--json", as_json, "Accepted; output is always JSON");

  auto* pm = app.add_subcommand("make-pm", "Emit the partition matroid M(P;k)");
  pm->add_option("--ground", ground, "Comma-separated labels")->required();
  pm->add_option("--block", blocks, "Comma-separated block (repeatable)")
      ->take_all();
  pm->add_option("--cap", caps, "Cap per block, in --block order (repeatable)")
      ->take_all();
  pm->add_flag("--json", as_json, "Accepted; output is always JSON");

  int n = 0;
  std::optional<int> rank;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List labelled matroids");
  enumerate->add_option("--n", n, "Ground set size (1..6)")->required();
  enumerate->add_option("--rank", rank, "Restrict to one rank");
  enumerate->add_flag("--count-only", count_only, "Print counts only");
  enumerate->add_flag("--json", as_json, "Machine-readable output");
  enumerate->add_option("--threads", threads, "Worker threads (0 = default)");

  std::vector<std::string> ids;
  bool examples = false;
  auto* verify = app.add_subcommand("verify", "Run the theorem registry");
  auto* verify_n =
      verify->add_option("--n", n, "Sweep all matroids on 1..N elements");
  auto* verify_examples =
      verify->add_flag("--examples", examples, "Run on the worked examples");
  verify_n->excludes(verify_examples);
  verify->add_option("--checks", ids, "Comma-separated check ids")
      ->delimiter(',');
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--threads", threads, "Worker threads (0 = default)");

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (verify->parsed() && !examples && verify_n->count() == 0) {
      throw UsageError("verify needs --n N or --examples");
    }
    if (analyze->parsed()) {
      code = Analyze(file, as_json, buffer);
    } else if (dual->parsed()) {
      buffer << SerializeDocument(ToDocument(ParseMatroidFile(file).Dual()))
             << "\n";
    } else if (forming->parsed()) {
      code = Forming(file, as_json, buffer);
    } else if (upm->parsed()) {
      code = MakeUpm(ground, blocks, buffer);
    } else if (pm->parsed()) {
      code = MakePm(ground, blocks, caps, buffer);
    } else if (enumerate->parsed()) {
      code = Enumerate(n, rank, count_only, as_json, threads, buffer);
    } else {
      code = RunVerify(n, ids, examples, as_json, threads, buffer);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MatroidError& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return IsAxiomViolation(e.code()) ? kExitInvalidMatroid : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace matroidlab
