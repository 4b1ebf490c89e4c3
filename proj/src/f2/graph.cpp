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

#include "zxcut/graph.hpp"

#include <numeric>

#include "zxcut/error.hpp"

namespace zxcut {

std::size_t Graph::num_edges() const {
    std::size_t total = 0;
    for (const Bits& r : adj_) total += r.count();
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw Error("Graph: self-loop");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
    if (u == v) throw Error("Graph: self-loop");
    adj_[u].flip(v);
    adj_[v].flip(u);
}

void Graph::local_complement(int v) {
    const Bits nb = adj_[v];
    for (auto a = nb.find_first(); a != Bits::npos; a = nb.find_next(a)) {
        adj_[a] ^= nb;
        adj_[a].reset(a);
    }
}

void Graph::pivot(int u, int v) {
    if (!has_edge(u, v)) throw PreconditionViolation("Graph::pivot on a non-edge", u);
    local_complement(u);
    local_complement(v);
    local_complement(u);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    Bits seen(size());
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen.test(s)) continue;
        Bits comp(size());
        Bits frontier(size());
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bits next(size());
            for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) next |= adj_[v];
            frontier = next - comp;
        }
        seen |= comp;
        out.push_back(to_indices(comp));
    }
    return out;
}

F2Matrix Graph::biadjacency(const Bits& x) const { return biadjacency(x, ~x); }

F2Matrix Graph::biadjacency(const Bits& x, const Bits& y) const {
    std::vector<int> cols = to_indices(y);
    std::vector<Bits> rows;
    rows.reserve(x.count());
    for (auto v = x.find_first(); v != Bits::npos; v = x.find_next(v)) {
        const Bits hits = adj_[v] & y;
        Bits r(cols.size());
        std::size_t j = 0;
        for (auto c = hits.find_first(); c != Bits::npos; c = hits.find_next(c)) {
            while (static_cast<std::size_t>(cols[j]) != c) ++j;
            r.set(j);
        }
        rows.push_back(std::move(r));
    }
    return F2Matrix(std::move(rows), cols.size());
}

DiagramGraph graph_of(const ZxDiagram& d) {
    DiagramGraph out;
    out.ids = d.spiders();
    for (std::size_t i = 0; i < out.ids.size(); ++i) out.index.emplace(out.ids[i], static_cast<int>(i));
    out.graph = Graph(out.ids.size());
    for (std::size_t i = 0; i < out.ids.size(); ++i) {
        for (const auto& [w, t] : d.neighbors(out.ids[i])) {
            auto it = out.index.find(w);
            if (it != out.index.end() && it->second > static_cast<int>(i)) {
                out.graph.add_edge(static_cast<int>(i), it->second);
            }
        }
    }
    return out;
}

Graph id_graph(const ZxDiagram& d) {
    Graph g(d.id_bound());
    for (VertexId v : d.spiders()) {
        for (const auto& [w, t] : d.neighbors(v)) {
            if (w > v && !d.is_boundary(w)) g.add_edge(v, w);
        }
    }
    return g;
}

Bits spider_bits(const ZxDiagram& d) {
    Bits b(d.id_bound());
    for (VertexId v : d.spiders()) b.set(static_cast<std::size_t>(v));
    return b;
}

}  // namespace zxcut
