// Copyright 2026 The zxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ZXCUT_EXACT_WIDTH_HPP
#define ZXCUT_EXACT_WIDTH_HPP

#include "zxcut/rank_decomposition.hpp"

namespace zxcut {

/// Minimum over all rank decompositions of g[vertices] of the largest edge score, by
/// dynamic programming over vertex subsets (O(3^n)). Throws SizeExceeded above
/// `max_vertices`.
int exact_width(const Graph& g, const Bits& vertices, Objective objective, std::size_t max_vertices = 16);
int exact_width(const Graph& g, Objective objective = Objective::CutRank, std::size_t max_vertices = 16);

}  // namespace zxcut

#endif  // ZXCUT_EXACT_WIDTH_HPP
