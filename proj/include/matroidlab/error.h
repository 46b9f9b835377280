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

#ifndef MATROIDLAB_ERROR_H_
#define MATROIDLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matroidlab/subset.h"

namespace matroidlab {

enum class ErrorCode {
  // Ground sets and set families.
  kInvalidGroundSet,
  kElementOutOfRange,
  kGroundMismatch,
  kInvalidPartition,
  // Base axioms.
  kEmptyFamily,
  kUnequalCardinality,
  kExchangeFailure,
  // Independence axioms.
  kMissingEmptySet,
  kNotDownwardClosed,
  kAugmentationFailure,
  // Constructors and derived structures.
  kCapOutOfRange,
  kRankZero,
  kNotABase,
  kSearchCapExceeded,
  kSupportMismatch,
  kGroundSetTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the codes that mean "the input is well formed but does not
// describe a matroid" (the CLI maps these to exit status 1).
bool IsAxiomViolation(ErrorCode code);

// Every failure raised by the library. Axiom violations carry a concrete
// witness: the offending sets in `witness_sets` and, where the axiom
// quantifies over an element, that element in `witness_elements`.
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& message,
               std::vector<Subset> witness_sets = {},
               std::vector<int> witness_elements = {});

  ErrorCode code() const { return code_; }
  const std::vector<Subset>& witness_sets() const { return witness_sets_; }
  const std::vector<int>& witness_elements() const { return witness_elements_; }

 private:
  ErrorCode code_;
  std::vector<Subset> witness_sets_;
  std::vector<int> witness_elements_;
};

}  // namespace matroidlab

#endif  // MATROIDLAB_ERROR_H_
