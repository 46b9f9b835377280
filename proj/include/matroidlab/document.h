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

// JSON matroid documents:
//   {"ground_set": ["1","2","3"], "bases": [["1","2"],["1","3"]]}
// or the same with "independents" in place of "bases". Integer labels are
// accepted and stringified. Emitted documents always use canonical bases.

#ifndef MATROIDLAB_DOCUMENT_H_
#define MATROIDLAB_DOCUMENT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/matroid.h"

namespace matroidlab {

// Malformed or unreadable document. Axiom violations are MatroidError.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatroidDocument {
  using Sets = std::vector<std::vector<std::string>>;
  std::vector<std::string> ground_set;
  // Exactly one of these is present.
  std::optional<Sets> bases;
  std::optional<Sets> independents;
};

MatroidDocument ParseDocument(std::string_view text);
// Validates labels and duplicates (DocumentError), then the axioms
// (MatroidError).
Matroid ToMatroid(const MatroidDocument& doc);
MatroidDocument ToDocument(const Matroid& m);
// Compact JSON, ground_set first.
std::string SerializeDocument(const MatroidDocument& doc);

// Reads, parses and validates a file. DocumentError when it cannot be read.
Matroid ParseMatroidFile(const std::string& path);

}  // namespace matroidlab

#endif  // MATROIDLAB_DOCUMENT_H_
