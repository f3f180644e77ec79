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

#ifndef PDSLAB_GRAPH_IO_H_
#define PDSLAB_GRAPH_IO_H_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pdslab/graph.h"

namespace pdslab {

class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// "n m" on the first non-comment line, then m lines "u v" with 0-based ids.
// Lines starting with '#' and blank lines are skipped. Self-loops and
// duplicate edges are errors.
Graph ReadGraph(std::istream& in);

// DIMACS: "p edge n m", then "e u v" with 1-based ids; "c" lines are
// comments. Repeated edges are merged, self-loops rejected.
Graph ReadDimacs(std::istream& in);

Graph ReadGraphFile(const std::string& path, bool dimacs = false);

void WriteGraph(std::ostream& out, const Graph& g);

// FNV-1a over the canonical edge list, as 16 hex digits.
std::string GraphDigest(const Graph& g);

}  // namespace pdslab

#endif  // PDSLAB_GRAPH_IO_H_
