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


// Brute-force rank-width: every unrooted leaf-labelled cubic tree, built by inserting
// leaves one at a time into each edge.

#ifndef ZXCUT_TESTS_TREE_ENUM_HPP
#define ZXCUT_TESTS_TREE_ENUM_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "naive_f2.hpp"

namespace zxcut::testing {

using EdgeList = std::vector<std::pair<int, int>>;

/// All cubic trees on leaves 0..n-1 (internal nodes numbered from n); n >= 2.
inline std::vector<EdgeList> all_cubic_trees(int n) {
    std::vector<EdgeList> out;
    std::function<void(EdgeList, int, int)> grow = [&](EdgeList t, int next_leaf, int next_internal) {
        if (next_leaf == n) {
            out.push_back(std::move(t));
            return;
        }
        for (std::size_t e = 0; e < t.size(); ++e) {
            EdgeList u = t;
            auto [a, b] = u[e];
            int mid = next_internal;
            u[e] = {a, mid};
            u.emplace_back(mid, b);
            u.emplace_back(mid, next_leaf);
            grow(std::move(u), next_leaf + 1, next_internal + 1);
        }
    };
    grow(EdgeList{{0, 1}}, 2, n);
    return out;
}

/// Leaves reachable from `a` without crossing edge (a, b).
inline std::vector<int> leaves_behind(const EdgeList& t, int n, int a, int b) {
    std::vector<int> out;
    std::vector<std::pair<int, int>> stack{{a, b}};
    while (!stack.empty()) {
        auto [x, from] = stack.back();
        stack.pop_back();
        if (x < n) out.push_back(x);
        for (auto [p, q] : t) {
            if (p == x && q != from) stack.push_back({q, x});
            if (q == x && p != from) stack.push_back({p, x});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimum over all cubic trees of the largest naive cut rank.
inline int brute_force_rank_width(const IntMatrix& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 1) return 0;
    int best = n;
    for (const EdgeList& t : all_cubic_trees(n)) {
        int w = 0;
        for (auto [a, b] : t) {
            std::vector<int> x = leaves_behind(t, n, a, b);
            std::vector<int> y;
            for (int v = 0; v < n; ++v) {
                if (!std::binary_search(x.begin(), x.end(), v)) y.push_back(v);
            }
            w = std::max(w, naive_rank(naive_cut_matrix(adj, x, y)));
            if (w >= best) break;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace zxcut::testing

#endif  // ZXCUT_TESTS_TREE_ENUM_HPP
