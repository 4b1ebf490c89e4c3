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


#include "zxcut/separators.hpp"

#include <cmath>

#include "zxcut/error.hpp"

namespace zxcut {

double total(const Weights& w, const Bits& set) {
    double s = 0;
    for (auto v = set.find_first(); v != Bits::npos; v = set.find_next(v)) s += w[v];
    return s;
}

Partition balanced_partition(const RankDecomposition& rd, const Weights& w) {
    Partition out;
    out.a = Bits(rd.graph_size);
    out.b = Bits(rd.graph_size);
    if (rd.root < 0) throw PreconditionViolation("balanced partition of an empty decomposition");

    // Node weights bottom-up; children always precede parents in a reversed DFS order.
    std::vector<double> node_w(rd.num_nodes(), 0.0);
    std::vector<int> node_leaves(rd.num_nodes(), 0);
    std::vector<int> order{rd.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        if (!rd.is_leaf(x)) {
            order.push_back(rd.left[x]);
            order.push_back(rd.right[x]);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (rd.is_leaf(x)) {
            for (int v : rd.leaf_sets[x]) node_w[x] += w[v];
            node_leaves[x] = 1;
        } else {
            node_w[x] = node_w[rd.left[x]] + node_w[rd.right[x]];
            node_leaves[x] = node_leaves[rd.left[x]] + node_leaves[rd.right[x]];
        }
    }
    const double whole = node_w[rd.root];
    if (!(whole > 0)) throw PreconditionViolation("balanced partition needs positive total weight");

    // Equal imbalance goes to the edge whose heavier side has fewer leaves.
    const int leaves = node_leaves[rd.root];
    auto edges = rd.unrooted_edges();
    int best = -1;
    double best_gap = 0;
    int best_heavy = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int x = edges[i].first;
        const double wa = node_w[x];
        const double gap = std::abs(2 * wa - whole);
        const int la = node_leaves[x];
        const int heavy = 2 * wa > whole ? la : 2 * wa < whole ? leaves - la : std::max(la, leaves - la);
        if (best < 0 || gap < best_gap || (gap == best_gap && heavy < best_heavy)) {
            best = static_cast<int>(i);
            best_gap = gap;
            best_heavy = heavy;
        }
    }
    Bits all = rd.universe();
    if (best < 0) {
        out.a = all;
        out.weight_a = whole;
        return out;
    }
    // Collect the chosen side by walking its subtree.
    std::vector<int> stack{edges[best].first};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (rd.is_leaf(x)) {
            for (int v : rd.leaf_sets[x]) out.a.set(v);
        } else {
            stack.push_back(rd.left[x]);
            stack.push_back(rd.right[x]);
        }
    }
    out.b = all - out.a;
    out.edge = best;
    out.weight_a = node_w[edges[best].first];
    out.weight_b = whole - out.weight_a;
    return out;
}

Bits balanced_separator(const TreeDecomposition& td, const Graph& g, const Bits& vertices, const Weights& w) {
    const double whole = total(w, vertices);
    if (!(whole > 0)) throw PreconditionViolation("balanced separator needs positive total weight");
    const std::size_t n = td.bags.size();
    const int root = static_cast<int>(n) - 1;
    std::vector<std::vector<int>> nbrs(n);
    for (auto [a, b] : td.edges) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    std::vector<int> parent(n, -1);
    std::vector<int> order{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int y : nbrs[order[i]]) {
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = order[i];
                order.push_back(y);
            }
        }
    }
    // Each vertex is charged to the bag nearest the root that holds it.
    std::vector<int> depth(n, 0);
    for (std::size_t i = 1; i < order.size(); ++i) depth[order[i]] = depth[parent[order[i]]] + 1;
    std::vector<int> top(g.size(), -1);
    for (std::size_t t = 0; t < n; ++t) {
        for (int v : td.bags[t]) {
            if (top[v] < 0 || depth[t] < depth[top[v]]) top[v] = static_cast<int>(t);
        }
    }
    std::vector<double> sub(n, 0.0);
    for (auto v = vertices.find_first(); v != Bits::npos; v = vertices.find_next(v)) {
        if (top[v] >= 0) sub[top[v]] += w[v];
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    }
    std::vector<std::vector<int>> children(n);
    for (int x : order) {
        if (parent[x] >= 0) children[parent[x]].push_back(x);
    }
    int at = root;
    for (;;) {
        int next = -1;
        for (int c : children[at]) {
            if (sub[c] > whole / 2 && (next < 0 || c < next)) next = c;
        }
        if (next < 0) break;
        at = next;
    }
    Bits sep(g.size());
    for (int v : td.bags[at]) sep.set(v);
    return sep & vertices;
}

FocusedPartition focused_partition(const Graph& g, const Bits& vertices, const Bits& special, const Weights& w,
                                   const AnnealOptions& options) {
    FocusedPartition out;
    Bits s = special & vertices;
    if (s.count() <= 1) {
        out.a = vertices;
        out.b = Bits(vertices.size());
        return out;
    }
    AnnealResult ar = anneal_focused(g, vertices, s, options);
    Weights masked(w.size(), 0.0);
    for (auto v = s.find_first(); v != Bits::npos; v = s.find_next(v)) masked[v] = w[v];
    Partition p = balanced_partition(ar.rd, masked);
    CutScorer scorer(g, vertices, options.objective);
    out.a = p.a;
    out.b = p.b;
    out.score = scorer.score(p.a);
    out.width = ar.width;
    return out;
}

}  // namespace zxcut
