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


#ifndef ZXCUT_RANK_DECOMPOSITION_HPP
#define ZXCUT_RANK_DECOMPOSITION_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zxcut/bits.hpp"
#include "zxcut/graph.hpp"

namespace zxcut {

enum class Objective { CutRank, Mixed };

const char* objective_name(Objective o);
Objective parse_objective(const std::string& name);

/// Scores cuts (X, U\X) of a fixed vertex universe U, memoized on the side of the cut
/// not holding the lowest vertex of U.
class CutScorer {
   public:
    CutScorer(const Graph& g, Bits universe, Objective objective);
    CutScorer(const Graph& g, Objective objective) : CutScorer(g, g.full_set(), objective) {}

    int score(const Bits& x);
    const Bits& universe() const noexcept { return universe_; }
    Objective objective() const noexcept { return objective_; }
    std::size_t cache_size() const noexcept { return cache_.size(); }

   private:
    const Graph* g_;
    Bits universe_;
    std::size_t lowest_;
    Objective objective_;
    std::unordered_map<Bits, int> cache_;
};

/// A rank decomposition kept as a rooted full binary tree. Suppressing the root gives the
/// cubic tree, so the root's two child edges are a single edge of the decomposition.
///
/// Leaves carry vertex sets rather than single vertices, which also covers the focused
/// form where non-special vertices ride along with a special one.
struct RankDecomposition {
    std::size_t graph_size = 0;
    int root = -1;
    std::vector<int> parent;
    std::vector<int> left;
    std::vector<int> right;
    std::vector<std::vector<int>> leaf_sets;

    std::size_t num_nodes() const noexcept { return parent.size(); }
    bool is_leaf(int x) const { return left[x] < 0; }
    std::vector<int> leaves() const;
    std::size_t num_leaves() const;

    /// Union of vertices under each node, indexed by node.
    std::vector<Bits> subtree_sets() const;
    /// One side of each edge of the unrooted tree, in edge order.
    std::vector<Bits> cuts() const;
    /// Edges of the unrooted tree (root suppressed); same order as cuts().
    std::vector<std::pair<int, int>> unrooted_edges() const;
    Bits universe() const;

    /// Drops vertices outside `keep`, then empty leaves and the internal nodes they
    /// leave with a single child.
    RankDecomposition restricted(const Bits& keep) const;

    /// Splits the leaf list into thirds joined at one internal node; each third hangs
    /// as a balanced subtree. Every cut then has a side inside one third.
    static RankDecomposition three_thirds(const std::vector<std::vector<int>>& leaf_sets,
                                          std::size_t graph_size);
};

int width(const RankDecomposition& rd, CutScorer& scorer);
int width(const RankDecomposition& rd, const Graph& g, Objective objective = Objective::CutRank);
int mixed_width(const RankDecomposition& rd, const Graph& g);

/// Independent structural check: the unrooted tree is a tree, internal nodes have
/// degree 3, and leaf sets partition `vertices`. With `special` given, each leaf holds
/// at most one special vertex; otherwise every leaf is a singleton. Returns an empty
/// string when valid, else the first violation.
std::string validate(const RankDecomposition& rd, const Bits& vertices, const Bits* special = nullptr);

}  // namespace zxcut

#endif  // ZXCUT_RANK_DECOMPOSITION_HPP
