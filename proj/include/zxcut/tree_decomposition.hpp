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


#ifndef ZXCUT_TREE_DECOMPOSITION_HPP
#define ZXCUT_TREE_DECOMPOSITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "zxcut/graph.hpp"

namespace zxcut {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> edges;

    /// Largest bag size minus one; -1 for an empty decomposition.
    int width() const;
};

/// Greedy min-fill elimination over `vertices` (ties: fewer neighbours, then lower
/// index). Bag i is the i-th eliminated vertex with its neighbours at that time; its
/// parent is the bag of the earliest-eliminated later neighbour. Components are chained.
TreeDecomposition min_fill_decomposition(const Graph& g, const Bits& vertices);
TreeDecomposition min_fill_decomposition(const Graph& g);

// Structural checks, each independent of the others.
bool is_tree(const TreeDecomposition& td);
bool covers_vertices(const TreeDecomposition& td, const Bits& vertices);
bool covers_edges(const TreeDecomposition& td, const Graph& g, const Bits& vertices);
bool has_connected_occurrences(const TreeDecomposition& td);

/// Empty string when all of the above hold, else the first failure.
std::string validate(const TreeDecomposition& td, const Graph& g, const Bits& vertices);

}  // namespace zxcut

#endif  // ZXCUT_TREE_DECOMPOSITION_HPP
