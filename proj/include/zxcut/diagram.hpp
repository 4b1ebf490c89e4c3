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

#ifndef ZXCUT_DIAGRAM_HPP
#define ZXCUT_DIAGRAM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zxcut/phase.hpp"
#include "zxcut/scalar.hpp"

namespace zxcut {

using VertexId = int;

enum class VertexKind : std::uint8_t { Boundary, Z, X };
enum class EdgeType : std::uint8_t { Plain, Hadamard };

inline EdgeType toggled(EdgeType t) {
    return t == EdgeType::Plain ? EdgeType::Hadamard : EdgeType::Plain;
}

/// An open graph of phased spiders with a tracked global scalar.
///
/// Vertex ids are stable: removing a vertex leaves a hole, and new vertices always get
/// fresh ids. Hadamard edges denote the normalized Hadamard matrix. Parallel edges and
/// self-loops are never stored; `add_edge_merging` resolves them with the spider rules.
class ZxDiagram {
   public:
    ZxDiagram() = default;

    VertexId add_vertex(VertexKind kind, Phase phase = Phase());
    /// Adds a vertex with a caller-chosen id (used by deserialization and sub-diagram
    /// extraction). Throws if the id is already taken.
    void add_vertex_with_id(VertexId id, VertexKind kind, Phase phase = Phase());
    void remove_vertex(VertexId v);

    /// Adds a new edge. Throws MalformedDiagram on a self-loop or an existing edge.
    void add_edge(VertexId u, VertexId v, EdgeType type);
    /// Adds an edge between two Z spiders, folding a pre-existing edge away with fusion,
    /// Hopf and self-loop rules (scalar updated). Self-loops are absorbed the same way.
    void add_edge_merging(VertexId u, VertexId v, EdgeType type);
    void remove_edge(VertexId u, VertexId v);
    void set_edge_type(VertexId u, VertexId v, EdgeType type);
    /// Adds or removes a Hadamard edge; returns +1 when added, -1 when removed.
    int toggle_hadamard(VertexId u, VertexId v);

    bool contains(VertexId v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < verts_.size() && verts_[v].alive;
    }
    std::optional<EdgeType> edge_type(VertexId u, VertexId v) const;
    bool connected(VertexId u, VertexId v) const { return edge_type(u, v).has_value(); }
    const std::map<VertexId, EdgeType>& neighbors(VertexId v) const { return at(v).nbrs; }
    std::size_t degree(VertexId v) const { return at(v).nbrs.size(); }

    VertexKind kind(VertexId v) const { return at(v).kind; }
    void set_kind(VertexId v, VertexKind k) { at(v).kind = k; }
    const Phase& phase(VertexId v) const { return at(v).phase; }
    void set_phase(VertexId v, const Phase& p) { at(v).phase = p; }
    void add_to_phase(VertexId v, const Phase& p) { at(v).phase += p; }

    bool is_boundary(VertexId v) const { return kind(v) == VertexKind::Boundary; }
    /// A spider with no boundary neighbour.
    bool is_interior(VertexId v) const;

    /// Live vertex ids in increasing order.
    std::vector<VertexId> vertices() const;
    /// Live non-boundary vertex ids in increasing order.
    std::vector<VertexId> spiders() const;
    std::size_t num_vertices() const noexcept { return live_; }
    std::size_t num_spiders() const;
    std::size_t num_edges() const;
    /// One past the largest id ever allocated.
    std::size_t id_bound() const noexcept { return verts_.size(); }

    const std::vector<VertexId>& inputs() const noexcept { return inputs_; }
    const std::vector<VertexId>& outputs() const noexcept { return outputs_; }
    void set_inputs(std::vector<VertexId> in) { inputs_ = std::move(in); }
    void set_outputs(std::vector<VertexId> out) { outputs_ = std::move(out); }

    const Scalar& scalar() const noexcept { return scalar_; }
    Scalar& scalar() noexcept { return scalar_; }

    /// No boundary vertices at all.
    bool is_closed() const;
    /// Only Z and boundary vertices, and every edge not touching a boundary is Hadamard.
    bool is_graph_like() const;

    /// Throws MalformedDiagram when a stored invariant is violated.
    void check_invariants() const;

    /// The induced sub-diagram on `keep` (ids preserved), with unit scalar.
    ZxDiagram induced(std::span<const VertexId> keep) const;

   private:
    struct Vertex {
        VertexKind kind = VertexKind::Z;
        Phase phase;
        std::map<VertexId, EdgeType> nbrs;
        bool alive = false;
    };

    Vertex& at(VertexId v);
    const Vertex& at(VertexId v) const;

    std::vector<Vertex> verts_;
    std::size_t live_ = 0;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    Scalar scalar_;
};

/// Number of spiders whose phase is not an exact multiple of π/2.
std::size_t nc_count(const ZxDiagram& d);
bool is_non_clifford(const ZxDiagram& d, VertexId v);

/// Connected components of the spider graph, each sorted, ordered by smallest id.
std::vector<std::vector<VertexId>> connected_components(const ZxDiagram& d);

/// Hash of the structure (ids, kinds, edges, phase classes); used to detect plan drift.
std::uint64_t structural_fingerprint(const ZxDiagram& d);

}  // namespace zxcut

#endif  // ZXCUT_DIAGRAM_HPP
