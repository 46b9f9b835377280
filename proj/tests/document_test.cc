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

#include <gtest/gtest.h>

#include "matroidlab/enumeration.h"

namespace matroidlab {
namespace {

TEST(DocumentTest, ParsesBasesAndIndependents) {
  const Matroid m = ToMatroid(ParseDocument(
      R"({"ground_set":["1","2","3"],"bases":[["1","2"],["1","3"]]})"));
  EXPECT_EQ(m.rank(), 2);
  const Matroid zero =
      ToMatroid(ParseDocument(R"({"ground_set":["1"],"bases":[[]]})"));
  EXPECT_EQ(zero.rank(), 0);
  const Matroid from_indep = ToMatroid(ParseDocument(
      R"({"ground_set":["a","b"],"independents":[[],["a"],["b"]]})"));
  EXPECT_EQ(SerializeDocument(ToDocument(from_indep)),
            R"({"ground_set":["a","b"],"bases":[["a"],["b"]]})");
}

TEST(DocumentTest, IntegerLabelsAreStringified) {
  const Matroid m =
      ToMatroid(ParseDocument(R"({"ground_set":[1,2],"bases":[[1],[2]]})"));
  EXPECT_EQ(m.ground().labels(), (std::vector<std::string>{"1", "2"}));
}

TEST(DocumentTest, AxiomErrorsAreMatroidErrors) {
  try {
    ToMatroid(
        ParseDocument(R"({"ground_set":["1","2"],"bases":[["1","2"],["1"]]})"));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnequalCardinality);
  }
}

TEST(DocumentTest, MalformedDocumentsAreDocumentErrors) {
  for (const char* text : {
           "not json",
           "[]",
           R"({"bases":[[]]})",
           R"({"ground_set":["1"]})",
           R"({"ground_set":["1"],"bases":[[]],"independents":[[]]})",
           R"({"ground_set":["1"],"bases":[["2"]]})",
           R"({"ground_set":["1","1"],"bases":[[]]})",
           R"({"ground_set":["1","2"],"bases":[["1"],["1"]]})",
           R"({"ground_set":["1","2"],"bases":[["1","1"]]})",
           R"({"ground_set":[true],"bases":[[]]})",
           R"({"ground_set":["1"],"bases":"x"})",
       }) {
    EXPECT_THROW(ToMatroid(ParseDocument(text)), DocumentError) << text;
  }
  EXPECT_THROW(ParseMatroidFile("/nonexistent/m.json"), DocumentError);
}

TEST(DocumentTest, RoundTripOverPopulation) {
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : EnumerateMatroids(n)) {
      const std::string text = SerializeDocument(ToDocument(m));
      EXPECT_EQ(ToMatroid(ParseDocument(text)), m);
      EXPECT_EQ(SerializeDocument(ToDocument(ToMatroid(ParseDocument(text)))),
                text);
    }
  }
}

}  // namespace
}  // namespace matroidlab
