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


#include "zxcut/tree_decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace zxcut {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

TreeDecomposition min_fill_decomposition(const Graph& g, const Bits& vertices) {
    const std::size_t n = g.size();
    std::vector<Bits> adj(n, Bits(n));
    for (int v : to_indices(vertices)) adj[v] = g.adj(v) & vertices;
    Bits alive = vertices;

    TreeDecomposition td;
    std::vector<int> order;
    std::vector<int> position(n, -1);
    std::vector<Bits> later;  // neighbours at elimination time
    while (alive.any()) {
        int best = -1;
        std::size_t best_fill = 0;
        std::size_t best_deg = 0;
        for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
            const Bits& nb = adj[v];
            std::size_t fill = 0;
            for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
                Bits missing = nb - adj[u];
                fill += missing.count() - 1;  // u itself is always in `missing`
            }
            fill /= 2;
            std::size_t deg = nb.count();
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = static_cast<int>(v);
                best_fill = fill;
                best_deg = deg;
            }
        }
        const Bits nb = adj[best];
        position[best] = static_cast<int>(order.size());
        order.push_back(best);
        later.push_back(nb);
        std::vector<int> bag = to_indices(nb);
        bag.insert(std::lower_bound(bag.begin(), bag.end(), best), best);
        td.bags.push_back(std::move(bag));
        for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u)) {
            adj[u] |= nb;
            adj[u].reset(u);
            adj[u].reset(best);
        }
        adj[best].reset();
        alive.reset(best);
    }

    std::vector<int> roots;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int parent = -1;
        for (auto u = later[i].find_first(); u != Bits::npos; u = later[i].find_next(u)) {
            if (parent < 0 || position[u] < parent) parent = position[u];
        }
        if (parent < 0) {
            roots.push_back(static_cast<int>(i));
        } else {
            td.edges.emplace_back(static_cast<int>(i), parent);
        }
    }
    for (std::size_t i = 1; i < roots.size(); ++i) td.edges.emplace_back(roots[i - 1], roots[i]);
    return td;
}

TreeDecomposition min_fill_decomposition(const Graph& g) { return min_fill_decomposition(g, g.full_set()); }

bool is_tree(const TreeDecomposition& td) {
    const std::size_t n = td.bags.size();
    if (n == 0) return td.edges.empty();
    if (td.edges.size() != n - 1) return false;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) return false;
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        comp[ra] = rb;
    }
    return true;
}

bool covers_vertices(const TreeDecomposition& td, const Bits& vertices) {
    Bits seen(vertices.size());
    for (const auto& b : td.bags) {
        for (int v : b) seen.set(v);
    }
    return vertices.is_subset_of(seen);
}

bool covers_edges(const TreeDecomposition& td, const Graph& g, const Bits& vertices) {
    std::vector<Bits> need(g.size());
    for (int v : to_indices(vertices)) need[v] = g.adj(v) & vertices;
    for (const auto& b : td.bags) {
        Bits in(g.size());
        for (int v : b) in.set(v);
        for (int v : b) need[v] -= in;
    }
    for (const Bits& r : need) {
        if (r.any()) return false;
    }
    return true;
}

bool has_connected_occurrences(const TreeDecomposition& td) {
    // For each vertex, the bags holding it must induce a connected subgraph of the tree.
    std::map<int, std::vector<int>> holders;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        for (int v : td.bags[i]) holders[v].push_back(static_cast<int>(i));
    }
    for (const auto& [v, nodes] : holders) {
        std::vector<int> comp(td.bags.size());
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        std::vector<char> has(td.bags.size(), 0);
        for (int t : nodes) has[t] = 1;
        std::size_t merges = 0;
        for (auto [a, b] : td.edges) {
            if (!has[a] || !has[b]) continue;
            int ra = find(a);
            int rb = find(b);
            if (ra != rb) {
                comp[ra] = rb;
                ++merges;
            }
        }
        if (merges + 1 != nodes.size()) return false;
    }
    return true;
}

std::string validate(const TreeDecomposition& td, const Graph& g, const Bits& vertices) {
    if (!is_tree(td)) return "bag graph is not a tree";
    if (!covers_vertices(td, vertices)) return "a vertex is in no bag";
    if (!covers_edges(td, g, vertices)) return "an edge is in no bag";
    if (!has_connected_occurrences(td)) return "a vertex's bags are disconnected";
    return "";
}

}  // namespace zxcut
