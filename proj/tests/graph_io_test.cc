// Copyright 2026 The pdslab Authors
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

#include <sstream>

#include <gtest/gtest.h>

#include "pdslab/catalog.h"
#include "pdslab/generators.h"
#include "pdslab/graph_io.h"

namespace pdslab {
namespace {

void ExpectParseError(const std::string& text, int line, int column, bool dimacs = false) {
  std::istringstream in(text);
  try {
    dimacs ? ReadDimacs(in) : ReadGraph(in);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const GraphParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(GraphIoTest, ReadsNativeFormat) {
  std::istringstream in("# c5\n5 5\n0 1\n1 2\n\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(ReadGraph(in), catalog::Cycle(5));
}

TEST(GraphIoTest, RoundTrip) {
  gen::Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const Graph g = gen::RandomGnp(rng, 12, 0.3);
    std::stringstream buffer;
    WriteGraph(buffer, g);
    EXPECT_EQ(ReadGraph(buffer), g);
  }
}

TEST(GraphIoTest, Diagnostics) {
  ExpectParseError("3 1\n0 x\n", 2, 3);
  ExpectParseError("3 1\n0 3\n", 2, 3);
  ExpectParseError("3 1\n1 1\n", 2, 1);
  ExpectParseError("3 2\n0 1\n1 0\n", 3, 1);
  ExpectParseError("3 2\n0 1\n", 3, 1);
  ExpectParseError("3 1\n0 1 2\n", 2, 5);
  ExpectParseError("", 1, 1);
}

TEST(GraphIoTest, Dimacs) {
  std::istringstream in("c five cycle\np edge 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 2 1\n");
  EXPECT_EQ(ReadDimacs(in), catalog::Cycle(5));
  ExpectParseError("p edge 3 1\ne 1 1\n", 2, 3, true);
  ExpectParseError("e 1 2\n", 1, 1, true);
}

TEST(GraphIoTest, DigestIsStable) {
  EXPECT_EQ(GraphDigest(catalog::Cycle(5)), GraphDigest(catalog::Cycle(5)));
  EXPECT_NE(GraphDigest(catalog::Cycle(5)), GraphDigest(catalog::Path(5)));
  EXPECT_EQ(GraphDigest(catalog::Cycle(5)).size(), 16u);
}

TEST(GraphIoTest, MissingFile) {
  EXPECT_THROW(ReadGraphFile("/nonexistent/graph.txt"), std::exception);
}

}  // namespace
}  // namespace pdslab
