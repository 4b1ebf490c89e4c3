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


#ifndef ZXCUT_F2LINALG_HPP
#define ZXCUT_F2LINALG_HPP

#include <utility>
#include <vector>

#include "zxcut/f2matrix.hpp"
#include "zxcut/graph.hpp"

namespace zxcut {

/// Rank of the biadjacency matrix between `x` and its complement.
int cut_rank(const Graph& g, const Bits& x);
/// Rank of the biadjacency matrix between disjoint sets `x` and `y`.
int cut_rank(const Graph& g, const Bits& x, const Bits& y);

/// Pairs (A_i, B_i) whose all-ones blocks XOR to the source matrix.
struct BipartiteDecomposition {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

/// Rank-one peeling: each pivot contributes (support of its column, support of its row).
/// Produces exactly rank(m) pairs.
BipartiteDecomposition bipartite_decomposition(const F2Matrix& m);

F2Matrix reconstruct(const BipartiteDecomposition& dec, std::size_t rows, std::size_t cols);

/// Deleted rows and columns plus a bipartite decomposition of what remains once
/// those rows and columns are zeroed. Score is 2*|pairs| + |rows| + |cols|.
struct MixedDecomposition {
    BipartiteDecomposition bipartite;
    std::vector<int> deleted_rows;
    std::vector<int> deleted_cols;

    int score() const {
        return static_cast<int>(2 * bipartite.pairs.size() + deleted_rows.size() + deleted_cols.size());
    }
};

/// Rows (true) or columns (false) whose removal lowers the rank.
Bits essential_rows(const F2Matrix& m);
Bits essential_cols(const F2Matrix& m);

/// Greedy mixed decomposition. Deletes the lowest-index rank-reducing row (rows before
/// columns) until none is left, then peels the remainder. Falls back to deleting every
/// nonzero row or column of the thinner side when that scores lower. Not optimal.
MixedDecomposition mixed_decomposition_greedy(const F2Matrix& m);

/// Checks the mixed reconstruction identity exactly over GF(2).
bool verify_mixed(const F2Matrix& m, const MixedDecomposition& dec);

/// A mixed decomposition of the cut (X, V\X) in graph vertex indices: pair sides
/// `first` lie in X, `second` in V\X.
struct MixedCut {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    std::vector<int> deleted;
    int score = 0;
};

/// Greedy mixed decomposition of the cut at `x`. The matrix is always oriented from the
/// side not holding the lowest-index vertex of g, so the result does not depend on
/// which side of the cut is passed.
MixedCut mixed_cut(const Graph& g, const Bits& x);
/// Same, for the cut (x, y) of the induced subgraph on x | y.
MixedCut mixed_cut(const Graph& g, const Bits& x, const Bits& y);
int mixed_score(const Graph& g, const Bits& x);
int mixed_score(const Graph& g, const Bits& x, const Bits& y);

}  // namespace zxcut

#endif  // ZXCUT_F2LINALG_HPP
