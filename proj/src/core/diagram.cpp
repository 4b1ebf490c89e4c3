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

#include "zxcut/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include "zxcut/error.hpp"

namespace zxcut {

ZxDiagram::Vertex& ZxDiagram::at(VertexId v) {
    if (!contains(v)) throw MalformedDiagram("no such vertex " + std::to_string(v));
    return verts_[v];
}

const ZxDiagram::Vertex& ZxDiagram::at(VertexId v) const {
    if (!contains(v)) throw MalformedDiagram("no such vertex " + std::to_string(v));
    return verts_[v];
}

VertexId ZxDiagram::add_vertex(VertexKind kind, Phase phase) {
    VertexId id = static_cast<VertexId>(verts_.size());
    verts_.push_back(Vertex{kind, phase, {}, true});
    ++live_;
    return id;
}

void ZxDiagram::add_vertex_with_id(VertexId id, VertexKind kind, Phase phase) {
    if (id < 0) throw MalformedDiagram("negative vertex id");
    if (static_cast<std::size_t>(id) >= verts_.size()) verts_.resize(id + 1);
    if (verts_[id].alive) throw MalformedDiagram("duplicate vertex id " + std::to_string(id));
    verts_[id] = Vertex{kind, phase, {}, true};
    ++live_;
}

void ZxDiagram::remove_vertex(VertexId v) {
    Vertex& x = at(v);
    for (const auto& [w, t] : x.nbrs) verts_[w].nbrs.erase(v);
    x.nbrs.clear();
    x.alive = false;
    --live_;
}

void ZxDiagram::add_edge(VertexId u, VertexId v, EdgeType type) {
    if (u == v) throw MalformedDiagram("self-loop on vertex " + std::to_string(u));
    Vertex& a = at(u);
    Vertex& b = at(v);
    if (a.nbrs.contains(v)) {
        throw MalformedDiagram("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    a.nbrs.emplace(v, type);
    b.nbrs.emplace(u, type);
}

void ZxDiagram::add_edge_merging(VertexId u, VertexId v, EdgeType type) {
    if (u == v) {
        if (kind(u) != VertexKind::Z) throw MalformedDiagram("self-loop on a non-Z vertex");
        if (type == EdgeType::Hadamard) {
            add_to_phase(u, Phase::pi());
            scalar_.add_half_power(-1);
        }
        return;
    }
    auto existing = edge_type(u, v);
    if (!existing) {
        add_edge(u, v, type);
        return;
    }
    if (kind(u) != VertexKind::Z || kind(v) != VertexKind::Z) {
        throw MalformedDiagram("parallel edge between non-Z vertices");
    }
    if (*existing == EdgeType::Plain && type == EdgeType::Plain) return;
    if (*existing == EdgeType::Hadamard && type == EdgeType::Hadamard) {
        // Hopf: two H-edges between Z spiders disconnect them, factor 1/2.
        remove_edge(u, v);
        scalar_.add_half_power(-2);
        return;
    }
    // A plain and a Hadamard edge: the pair fuses with an H self-loop, i.e. a π phase and 1/√2.
    set_edge_type(u, v, EdgeType::Plain);
    add_to_phase(u, Phase::pi());
    scalar_.add_half_power(-1);
}

void ZxDiagram::remove_edge(VertexId u, VertexId v) {
    Vertex& a = at(u);
    Vertex& b = at(v);
    if (!a.nbrs.erase(v)) {
        throw MalformedDiagram("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    b.nbrs.erase(u);
}

void ZxDiagram::set_edge_type(VertexId u, VertexId v, EdgeType type) {
    Vertex& a = at(u);
    Vertex& b = at(v);
    auto it = a.nbrs.find(v);
    if (it == a.nbrs.end()) {
        throw MalformedDiagram("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    it->second = type;
    b.nbrs[u] = type;
}

int ZxDiagram::toggle_hadamard(VertexId u, VertexId v) {
    auto t = edge_type(u, v);
    if (!t) {
        add_edge(u, v, EdgeType::Hadamard);
        return 1;
    }
    if (*t != EdgeType::Hadamard) throw MalformedDiagram("toggle_hadamard on a plain edge");
    remove_edge(u, v);
    return -1;
}

std::optional<EdgeType> ZxDiagram::edge_type(VertexId u, VertexId v) const {
    const auto& n = at(u).nbrs;
    auto it = n.find(v);
    if (it == n.end()) return std::nullopt;
    return it->second;
}

bool ZxDiagram::is_interior(VertexId v) const {
    if (is_boundary(v)) return false;
    for (const auto& [w, t] : neighbors(v)) {
        if (is_boundary(w)) return false;
    }
    return true;
}

std::vector<VertexId> ZxDiagram::vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_);
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i].alive) out.push_back(static_cast<VertexId>(i));
    }
    return out;
}

std::vector<VertexId> ZxDiagram::spiders() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i].alive && verts_[i].kind != VertexKind::Boundary) {
            out.push_back(static_cast<VertexId>(i));
        }
    }
    return out;
}

std::size_t ZxDiagram::num_spiders() const {
    std::size_t n = 0;
    for (const auto& v : verts_) n += v.alive && v.kind != VertexKind::Boundary;
    return n;
}

std::size_t ZxDiagram::num_edges() const {
    std::size_t twice = 0;
    for (const auto& v : verts_) {
        if (v.alive) twice += v.nbrs.size();
    }
    return twice / 2;
}

bool ZxDiagram::is_closed() const {
    for (const auto& v : verts_) {
        if (v.alive && v.kind == VertexKind::Boundary) return false;
    }
    return true;
}

bool ZxDiagram::is_graph_like() const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vertex& v = verts_[i];
        if (!v.alive) continue;
        if (v.kind == VertexKind::X) return false;
        if (v.kind == VertexKind::Boundary) continue;
        for (const auto& [w, t] : v.nbrs) {
            if (verts_[w].kind != VertexKind::Boundary && t != EdgeType::Hadamard) return false;
        }
    }
    return true;
}

void ZxDiagram::check_invariants() const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vertex& v = verts_[i];
        if (!v.alive) continue;
        VertexId id = static_cast<VertexId>(i);
        if (v.kind == VertexKind::Boundary) {
            if (v.nbrs.size() != 1) {
                throw MalformedDiagram("boundary " + std::to_string(id) + " must have degree 1");
            }
            if (!v.phase.is_zero()) {
                throw MalformedDiagram("boundary " + std::to_string(id) + " has a phase");
            }
        }
        for (const auto& [w, t] : v.nbrs) {
            if (w == id) throw MalformedDiagram("self-loop on " + std::to_string(id));
            if (!contains(w)) throw MalformedDiagram("dangling edge at " + std::to_string(id));
            auto back = verts_[w].nbrs.find(id);
            if (back == verts_[w].nbrs.end() || back->second != t) {
                throw MalformedDiagram("asymmetric adjacency at " + std::to_string(id));
            }
        }
    }
    for (VertexId b : inputs_) {
        if (!contains(b) || !is_boundary(b)) throw MalformedDiagram("input is not a boundary");
    }
    for (VertexId b : outputs_) {
        if (!contains(b) || !is_boundary(b)) throw MalformedDiagram("output is not a boundary");
    }
}

ZxDiagram ZxDiagram::induced(std::span<const VertexId> keep) const {
    ZxDiagram out;
    out.verts_.resize(verts_.size());
    for (VertexId v : keep) {
        const Vertex& src = at(v);
        out.verts_[v] = Vertex{src.kind, src.phase, {}, true};
        ++out.live_;
    }
    for (VertexId v : keep) {
        for (const auto& [w, t] : verts_[v].nbrs) {
            if (out.contains(w)) out.verts_[v].nbrs.emplace(w, t);
        }
    }
    for (VertexId b : inputs_) {
        if (out.contains(b)) out.inputs_.push_back(b);
    }
    for (VertexId b : outputs_) {
        if (out.contains(b)) out.outputs_.push_back(b);
    }
    return out;
}

bool is_non_clifford(const ZxDiagram& d, VertexId v) {
    return !d.is_boundary(v) && !d.phase(v).is_clifford();
}

std::size_t nc_count(const ZxDiagram& d) {
    std::size_t n = 0;
    for (VertexId v : d.spiders()) n += is_non_clifford(d, v);
    return n;
}

std::vector<std::vector<VertexId>> connected_components(const ZxDiagram& d) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> seen(d.id_bound(), 0);
    for (VertexId s : d.spiders()) {
        if (seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const auto& [w, t] : d.neighbors(comp[i])) {
                if (!seen[w] && !d.is_boundary(w)) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::uint64_t structural_fingerprint(const ZxDiagram& d) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (VertexId v : d.vertices()) {
        mix(static_cast<std::uint64_t>(v));
        mix(static_cast<std::uint64_t>(d.kind(v)));
        const Phase& p = d.phase(v);
        if (p.is_exact()) {
            mix(static_cast<std::uint64_t>(p.numerator()));
            mix(static_cast<std::uint64_t>(p.denominator()));
        } else {
            mix(std::bit_cast<std::uint64_t>(p.radians()));
        }
        for (const auto& [w, t] : d.neighbors(v)) {
            if (w > v) {
                mix(static_cast<std::uint64_t>(w));
                mix(static_cast<std::uint64_t>(t));
            }
        }
    }
    return h;
}

}  // namespace zxcut
