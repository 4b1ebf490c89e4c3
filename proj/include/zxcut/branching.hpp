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


// Cut actions: the vertex cuts and bipartite sums that split a diagram along a partition.

#ifndef ZXCUT_BRANCHING_HPP
#define ZXCUT_BRANCHING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "zxcut/diagram.hpp"
#include "zxcut/graph.hpp"
#include "zxcut/rewrite.hpp"

namespace zxcut {

/// Applies branch (k, j) of the complete bipartite sum that removes every H-edge between
/// `a` and `b`: toggles K_{a,b}, adds kπ on `a` and jπ on `b`, and returns the branch
/// coefficient. Summed over k, j in {0, 1}, coefficient times value gives the value of
/// the input. Both sides must be non-empty, disjoint sets of live Z spiders.
Scalar bipartite_branch(ZxDiagram& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b, int k,
                        int j);

/// Vertex cuts on `deleted`, then one bipartite sum per pair. The cross edges of a
/// partition are all removed when the pairs reconstruct its biadjacency matrix with the
/// deleted rows and columns zeroed.
struct CutAction {
    std::vector<VertexId> deleted;
    std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> pairs;

    /// log2 of the branch count: |deleted| + 2 |pairs|.
    int score() const { return static_cast<int>(deleted.size() + 2 * pairs.size()); }
    std::uint64_t branches() const;
};

/// Action removing all edges between the disjoint spider sets `a` and `b` of `d`: a
/// bipartite decomposition of their biadjacency matrix, or the greedy mixed one.
CutAction partition_action(const ZxDiagram& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                           bool mixed);

/// Same, on a graph whose vertex indices are the diagram's vertex ids (see id_graph).
CutAction partition_action(const Graph& g, const Bits& a, const Bits& b, bool mixed);

/// Vertex cuts only.
CutAction vertex_action(std::vector<VertexId> vertices);

/// Applies branch `index` of `action` to `d` and returns its coefficient. Bit i of the
/// index (i < |deleted|) selects the vertex-cut branch of deleted[i]; the next bits come
/// in (k, j) pairs, one per bipartite pair.
Scalar apply_branch(ZxDiagram& d, const CutAction& action, std::uint64_t index);

/// Value of a closed graph-like diagram with few non-Clifford spiders: full_reduce, then
/// vertex-cut the lowest remaining spider (non-Clifford first) and recurse on both
/// branches. Exponential in whatever full_reduce leaves behind.
Scalar evaluate_leaf(ZxDiagram d, const ReduceOptions& options = {});

}  // namespace zxcut

#endif  // ZXCUT_BRANCHING_HPP
