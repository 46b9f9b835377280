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

#include "matroidlab/document.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace matroidlab {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string LabelOf(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw DocumentError("element labels must be strings or integers, got " +
                      value.dump());
}

std::vector<std::string> LabelList(const json& value, std::string_view what) {
  if (!value.is_array()) {
    throw DocumentError(std::string(what) + " must be an array");
  }
  std::vector<std::string> out;
  for (const json& item : value) out.push_back(LabelOf(item));
  return out;
}

MatroidDocument::Sets SetList(const json& value, std::string_view key) {
  if (!value.is_array()) {
    throw DocumentError("\"" + std::string(key) +
                        "\" must be an array of arrays");
  }
  MatroidDocument::Sets out;
  for (const json& set : value) out.push_back(LabelList(set, "each set"));
  return out;
}

SetFamily FamilyOf(const GroundSet& ground, const MatroidDocument::Sets& sets,
                   std::string_view key) {
  std::vector<Subset> members;
  std::set<Subset> seen;
  for (const auto& labels : sets) {
    Subset s;
    for (const std::string& label : labels) {
      std::optional<int> index = ground.IndexOf(label);
      if (!index) {
        throw DocumentError("label \"" + label + "\" in " + std::string(key) +
                            " is not in ground_set");
      }
      if (s.contains(*index)) {
        throw DocumentError("label \"" + label + "\" repeated within a set");
      }
      s = s.With(*index);
    }
    if (!seen.insert(s).second) {
      throw DocumentError("duplicate set " + ground.Format(s) + " in " +
                          std::string(key));
    }
    members.push_back(s);
  }
  return SetFamily(ground, std::move(members));
}

}  // namespace

MatroidDocument ParseDocument(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");
  if (!root.contains("ground_set"))
    throw DocumentError("missing \"ground_set\"");
  const bool has_bases = root.contains("bases");
  const bool has_independents = root.contains("independents");
  if (has_bases == has_independents) {
    throw DocumentError(
        "exactly one of \"bases\" and \"independents\" must be present");
  }
  MatroidDocument doc;
  doc.ground_set = LabelList(root["ground_set"], "\"ground_set\"");
  if (has_bases) {
    doc.bases = SetList(root["bases"], "bases");
  } else {
    doc.independents = SetList(root["independents"], "independents");
  }
  return doc;
}

Matroid ToMatroid(const MatroidDocument& doc) {
  std::set<std::string> distinct(doc.ground_set.begin(), doc.ground_set.end());
  if (distinct.size() != doc.ground_set.size()) {
    throw DocumentError("duplicate label in ground_set");
  }
  // Empty or oversized ground sets surface as MatroidError(kInvalidGroundSet).
  const GroundSet ground(doc.ground_set);
  if (doc.bases)
    return Matroid::FromBases(FamilyOf(ground, *doc.bases, "bases"));
  return Matroid::FromIndependents(
      FamilyOf(ground, *doc.independents, "independents"));
}

MatroidDocument ToDocument(const Matroid& m) {
  MatroidDocument doc;
  doc.ground_set = m.ground().labels();
  MatroidDocument::Sets bases;
  for (Subset b : m.bases()) {
    std::vector<std::string> labels;
    for (int e : b.Elements()) labels.push_back(m.ground().label(e));
    bases.push_back(std::move(labels));
  }
  doc.bases = std::move(bases);
  return doc;
}

std::string SerializeDocument(const MatroidDocument& doc) {
  ordered_json out;
  out["ground_set"] = doc.ground_set;
  if (doc.bases) out["bases"] = *doc.bases;
  if (doc.independents) out["independents"] = *doc.independents;
  return out.dump();
}

Matroid ParseMatroidFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ToMatroid(ParseDocument(text.str()));
}

}  // namespace matroidlab
