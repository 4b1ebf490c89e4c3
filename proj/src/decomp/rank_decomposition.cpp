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


#include "zxcut/rank_decomposition.hpp"

#include <algorithm>
#include <functional>

#include "zxcut/error.hpp"
#include "zxcut/f2linalg.hpp"

namespace zxcut {

const char* objective_name(Objective o) { return o == Objective::Mixed ? "mixed" : "cut_rank"; }

Objective parse_objective(const std::string& name) {
    if (name == "mixed") return Objective::Mixed;
    if (name == "cut_rank" || name == "rank") return Objective::CutRank;
    throw ParseError("unknown objective '" + name + "'");
}

CutScorer::CutScorer(const Graph& g, Bits universe, Objective objective)
    : g_(&g), universe_(std::move(universe)), lowest_(universe_.find_first()), objective_(objective) {}

int CutScorer::score(const Bits& x) {
    Bits side = x & universe_;
    if (lowest_ != Bits::npos && side.test(lowest_)) side = universe_ - side;
    auto it = cache_.find(side);
    if (it != cache_.end()) return it->second;
    Bits other = universe_ - side;
    int s = objective_ == Objective::Mixed ? mixed_score(*g_, side, other) : cut_rank(*g_, side, other);
    cache_.emplace(std::move(side), s);
    return s;
}

std::vector<int> RankDecomposition::leaves() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < num_nodes(); ++x) {
        if (left[x] < 0) out.push_back(static_cast<int>(x));
    }
    return out;
}

std::size_t RankDecomposition::num_leaves() const { return leaves().size(); }

std::vector<Bits> RankDecomposition::subtree_sets() const {
    std::vector<Bits> sets(num_nodes(), Bits(graph_size));
    if (root < 0) return sets;
    // Iterative post-order.
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [x, done] = stack.back();
        stack.pop_back();
        if (left[x] < 0) {
            for (int v : leaf_sets[x]) sets[x].set(v);
        } else if (done) {
            sets[x] = sets[left[x]] | sets[right[x]];
        } else {
            stack.push_back({x, true});
            stack.push_back({left[x], false});
            stack.push_back({right[x], false});
        }
    }
    return sets;
}

std::vector<std::pair<int, int>> RankDecomposition::unrooted_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < num_nodes(); ++i) {
        int x = static_cast<int>(i);
        int p = parent[x];
        if (p < 0) continue;
        if (p == root) {
            if (left[root] == x) out.emplace_back(x, right[root]);
        } else {
            out.emplace_back(x, p);
        }
    }
    return out;
}

std::vector<Bits> RankDecomposition::cuts() const {
    std::vector<Bits> sets = subtree_sets();
    std::vector<Bits> out;
    for (const auto& e : unrooted_edges()) out.push_back(sets[e.first]);
    return out;
}

Bits RankDecomposition::universe() const {
    Bits u(graph_size);
    for (const auto& s : leaf_sets) {
        for (int v : s) u.set(v);
    }
    return u;
}

RankDecomposition RankDecomposition::restricted(const Bits& keep) const {
    RankDecomposition out;
    out.graph_size = graph_size;
    auto add_node = [&](int l, int r, std::vector<int> set) {
        int id = static_cast<int>(out.parent.size());
        out.parent.push_back(-1);
        out.left.push_back(l);
        out.right.push_back(r);
        out.leaf_sets.push_back(std::move(set));
        if (l >= 0) out.parent[l] = id;
        if (r >= 0) out.parent[r] = id;
        return id;
    };
    std::function<int(int)> build = [&](int x) -> int {
        if (left[x] < 0) {
            std::vector<int> set;
            for (int v : leaf_sets[x]) {
                if (keep.test(v)) set.push_back(v);
            }
            return set.empty() ? -1 : add_node(-1, -1, std::move(set));
        }
        int l = build(left[x]);
        int r = build(right[x]);
        if (l < 0) return r;
        if (r < 0) return l;
        return add_node(l, r, {});
    };
    if (root >= 0) out.root = build(root);
    return out;
}

RankDecomposition RankDecomposition::three_thirds(const std::vector<std::vector<int>>& sets,
                                                  std::size_t graph_size) {
    RankDecomposition rd;
    rd.graph_size = graph_size;
    if (sets.empty()) return rd;
    auto add_node = [&](int l, int r, std::vector<int> set) {
        int id = static_cast<int>(rd.parent.size());
        rd.parent.push_back(-1);
        rd.left.push_back(l);
        rd.right.push_back(r);
        rd.leaf_sets.push_back(std::move(set));
        if (l >= 0) rd.parent[l] = id;
        if (r >= 0) rd.parent[r] = id;
        return id;
    };
    std::vector<int> leaf_ids;
    for (const auto& s : sets) leaf_ids.push_back(add_node(-1, -1, s));
    std::function<int(std::size_t, std::size_t)> balanced = [&](std::size_t lo, std::size_t hi) -> int {
        if (hi - lo == 1) return leaf_ids[lo];
        std::size_t mid = lo + (hi - lo) / 2;
        int l = balanced(lo, mid);
        int r = balanced(mid, hi);
        return add_node(l, r, {});
    };
    const std::size_t k = sets.size();
    if (k <= 2) {
        rd.root = balanced(0, k);
        return rd;
    }
    const std::size_t a = (k + 2) / 3;
    const std::size_t b = a + (k - a + 1) / 2;
    int t1 = balanced(0, a);
    int t2 = balanced(a, b);
    int t3 = balanced(b, k);
    rd.root = add_node(t1, add_node(t2, t3, {}), {});
    return rd;
}

int width(const RankDecomposition& rd, CutScorer& scorer) {
    int w = 0;
    for (const Bits& c : rd.cuts()) w = std::max(w, scorer.score(c));
    return w;
}

int width(const RankDecomposition& rd, const Graph& g, Objective objective) {
    CutScorer scorer(g, rd.universe(), objective);
    return width(rd, scorer);
}

int mixed_width(const RankDecomposition& rd, const Graph& g) { return width(rd, g, Objective::Mixed); }

std::string validate(const RankDecomposition& rd, const Bits& vertices, const Bits* special) {
    const std::size_t n = rd.num_nodes();
    if (rd.parent.size() != n || rd.left.size() != n || rd.right.size() != n || rd.leaf_sets.size() != n) {
        return "array sizes differ";
    }
    if (n == 0) return vertices.none() ? "" : "empty tree with vertices";
    if (rd.root < 0 || static_cast<std::size_t>(rd.root) >= n) return "bad root";

    // Reachable nodes from the root, via child links only.
    std::vector<int> reach;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{rd.root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (seen[x]) return "cycle in child links";
        seen[x] = 1;
        reach.push_back(x);
        if ((rd.left[x] < 0) != (rd.right[x] < 0)) return "node with one child";
        for (int c : {rd.left[x], rd.right[x]}) {
            if (c < 0) continue;
            if (static_cast<std::size_t>(c) >= n || rd.parent[c] != x) return "inconsistent parent link";
            stack.push_back(c);
        }
    }
    if (rd.parent[rd.root] != -1) return "root has a parent";
    std::vector<int> leaves;
    for (int x : reach) {
        if (rd.left[x] < 0) {
            leaves.push_back(x);
        }
    }

    // The unrooted tree built from unrooted_edges(): connectivity and degrees.
    auto edges = rd.unrooted_edges();
    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> nbrs(n);
    for (auto [a, b] : edges) {
        ++degree[a];
        ++degree[b];
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    const bool root_suppressed = leaves.size() >= 2;
    const std::size_t tree_nodes = reach.size() - (root_suppressed ? 1 : 0);
    if (edges.size() + 1 != tree_nodes) return "edge count is not nodes - 1";
    if (leaves.size() >= 2 && edges.size() != 2 * leaves.size() - 3) return "edge count is not 2L - 3";
    if (tree_nodes > 1) {
        std::vector<char> vis(n, 0);
        std::vector<int> st{leaves[0]};
        std::size_t count = 0;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            if (vis[x]) continue;
            vis[x] = 1;
            ++count;
            for (int y : nbrs[x]) st.push_back(y);
        }
        if (count != tree_nodes) return "unrooted tree is disconnected";
    }
    for (int x : reach) {
        if (root_suppressed && x == rd.root) continue;
        bool leaf = rd.left[x] < 0;
        if (leaf && tree_nodes > 1 && degree[x] != 1) return "leaf degree is not 1";
        if (!leaf && degree[x] != 3) return "internal degree is not 3";
    }

    Bits covered(rd.graph_size);
    for (int x : leaves) {
        const auto& set = rd.leaf_sets[x];
        if (set.empty()) return "empty leaf";
        std::size_t specials = 0;
        for (int v : set) {
            if (v < 0 || static_cast<std::size_t>(v) >= rd.graph_size) return "vertex out of range";
            if (covered.test(v)) return "vertex in two leaves";
            covered.set(v);
            if (special && special->test(v)) ++specials;
        }
        if (special ? specials > 1 : set.size() != 1) return special ? "leaf with two special vertices" : "leaf is not a singleton";
    }
    if (covered != vertices) return "leaf sets do not cover the vertex set";
    return "";
}

}  // namespace zxcut
