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


#include "zxcut/exact_width.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#include "zxcut/error.hpp"

namespace zxcut {

int exact_width(const Graph& g, const Bits& vertices, Objective objective, std::size_t max_vertices) {
    const std::vector<int> ids = to_indices(vertices);
    const std::size_t k = ids.size();
    if (k > max_vertices || k > 24) throw SizeExceeded("exact_width: too many vertices");
    if (k <= 1) return 0;
    const std::uint32_t full = (1u << k) - 1;
    CutScorer scorer(g, vertices, objective);
    std::vector<int> score(full + 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
        Bits x(g.size());
        for (std::size_t i = 0; i < k; ++i) {
            if (m >> i & 1u) x.set(ids[i]);
        }
        score[m] = scorer.score(x);
    }
    // best[m]: minimum width of a rooted binary tree with leaves m, counting the cuts
    // of every subtree strictly below the top.
    std::vector<int> best(full + 1, 0);
    std::vector<std::uint32_t> masks(full);
    for (std::uint32_t m = 1; m <= full; ++m) masks[m - 1] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t m : masks) {
        if (std::popcount(m) < 2) continue;
        const std::uint32_t low = m & (~m + 1);
        const std::uint32_t rest = m ^ low;
        int b = INT_MAX;
        // Submasks holding the lowest bit, excluding m itself.
        for (std::uint32_t s = rest; ; s = (s - 1) & rest) {
            std::uint32_t part = s | low;
            if (part != m) {
                std::uint32_t other = m ^ part;
                int v = std::max({score[part], score[other], best[part], best[other]});
                b = std::min(b, v);
            }
            if (s == 0) break;
        }
        best[m] = b;
    }
    return best[full];
}

int exact_width(const Graph& g, Objective objective, std::size_t max_vertices) {
    return exact_width(g, g.full_set(), objective, max_vertices);
}

}  // namespace zxcut
