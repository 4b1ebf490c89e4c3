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

#ifndef ZXCUT_GRAPH_HPP
#define ZXCUT_GRAPH_HPP

#include <unordered_map>
#include <vector>

#include "zxcut/bits.hpp"
#include "zxcut/diagram.hpp"
#include "zxcut/f2matrix.hpp"

namespace zxcut {

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bit rows.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, Bits(n)) {}

    std::size_t size() const noexcept { return adj_.size(); }
    const Bits& adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return adj(u).test(static_cast<std::size_t>(v)); }
    std::size_t degree(int v) const { return adj(v).count(); }
    std::size_t num_edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    /// Complements the neighbourhood of v.
    void local_complement(int v);
    /// Pivot on edge uv, as local complements at u, v, u.
    void pivot(int u, int v);

    /// Subgraph on `keep`, renumbered in increasing order of the kept indices.
    Graph induced(const std::vector<int>& keep) const;
    std::vector<std::vector<int>> components() const;

    /// Biadjacency matrix with rows X and columns V\X, both in increasing order.
    F2Matrix biadjacency(const Bits& x) const;
    /// Biadjacency matrix with rows `x` and columns `y`, both in increasing order.
    F2Matrix biadjacency(const Bits& x, const Bits& y) const;

    Bits full_set() const {
        Bits b(size());
        b.set();
        return b;
    }

   private:
    std::vector<Bits> adj_;
};

/// The spider graph of a diagram, plus the index <-> vertex id maps.
struct DiagramGraph {
    Graph graph;
    std::vector<VertexId> ids;
    std::unordered_map<VertexId, int> index;
};

/// Spiders of `d` as graph vertices (sorted by id); edges between spiders of any type.
DiagramGraph graph_of(const ZxDiagram& d);

/// Spider graph indexed directly by vertex id (size d.id_bound()); dead ids and
/// boundaries are isolated.
Graph id_graph(const ZxDiagram& d);

/// Live spider ids as a set over [0, d.id_bound()).
Bits spider_bits(const ZxDiagram& d);

}  // namespace zxcut

#endif  // ZXCUT_GRAPH_HPP
