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

#ifndef PDSLAB_RESULT_H_
#define PDSLAB_RESULT_H_

#include <optional>
#include <string_view>

#include "pdslab/vertex_set.h"

namespace pdslab {

enum class SolveMethod { kBrute, kH1, kH2, kCoH1, kCoH2, kFallback };

std::string_view ToString(SolveMethod m);

struct SolveResult {
  // 0 when no (connected) PDS exists.
  int size = 0;
  std::optional<VertexSet> witness;
  SolveMethod method = SolveMethod::kBrute;
  // Set only after an explicit re-check of the witness.
  bool verified = false;
};

inline constexpr int kDefaultOracleCap = 24;
inline constexpr int kMaxOracleVertices = 63;

}  // namespace pdslab

#endif  // PDSLAB_RESULT_H_
