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


#ifndef ZXCUT_SEPARATORS_HPP
#define ZXCUT_SEPARATORS_HPP

#include <vector>

#include "zxcut/anneal.hpp"
#include "zxcut/rank_decomposition.hpp"
#include "zxcut/tree_decomposition.hpp"

namespace zxcut {

/// Non-negative vertex weights indexed by graph vertex.
using Weights = std::vector<double>;

double total(const Weights& w, const Bits& set);

struct Partition {
    Bits a;
    Bits b;
    /// Index into rd.unrooted_edges(); -1 when the decomposition has no edge.
    int edge = -1;
    double weight_a = 0;
    double weight_b = 0;
};

/// The edge cut of `rd` whose sides are closest in weight. Ties go to the edge whose
/// heavier side has fewer leaves, then to the lowest edge index.
/// Linear in the tree size. Throws PreconditionViolation when the total weight is zero.
Partition balanced_partition(const RankDecomposition& rd, const Weights& w);

/// A bag of `td` whose removal leaves no component of g[vertices] heavier than half the
/// total: walk from the last bag towards the child subtree holding more than half.
/// Throws PreconditionViolation when the total weight is zero.
Bits balanced_separator(const TreeDecomposition& td, const Graph& g, const Bits& vertices, const Weights& w);

struct FocusedPartition {
    Bits a;
    Bits b;
    int score = 0;
    /// Width of the focused decomposition the partition came from.
    int width = 0;
};

/// Balanced cut of g[vertices] from an annealed focused decomposition with special set
/// `special`; `w` is read on special vertices only. With at most one special vertex the
/// trivial split (vertices, {}) with score 0 is returned.
FocusedPartition focused_partition(const Graph& g, const Bits& vertices, const Bits& special, const Weights& w,
                                   const AnnealOptions& options);

}  // namespace zxcut

#endif  // ZXCUT_SEPARATORS_HPP
