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

#include "zxcut/rewrite.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "zxcut/error.hpp"

namespace zxcut {

// Scalar bookkeeping for the graph-like rules below. Writing the value of a closed
// graph-like diagram as
//
//     scalar · 2^(-|E|/2) · Σ_x Π_v e^{iα_v x_v} Π_{uv∈E} (-1)^{x_u x_v}
//
// (normalized H-edges), each rule is an identity on the sum with a factor f. To keep
// the value fixed the scalar picks up f · 2^((|E'|-|E|)/2), i.e. the edge-count delta
// goes into the half power.

namespace {

bool graph_like_interior(const ZxDiagram& d, VertexId v) {
    if (!d.contains(v) || d.kind(v) != VertexKind::Z) return false;
    for (const auto& [w, t] : d.neighbors(v)) {
        if (d.kind(w) != VertexKind::Z || t != EdgeType::Hadamard) return false;
    }
    return true;
}

std::vector<VertexId> neighbor_list(const ZxDiagram& d, VertexId v) {
    std::vector<VertexId> out;
    out.reserve(d.degree(v));
    for (const auto& [w, t] : d.neighbors(v)) out.push_back(w);
    return out;
}

bool has_leaf_neighbor(const ZxDiagram& d, VertexId v) {
    for (const auto& [w, t] : d.neighbors(v)) {
        if (d.degree(w) == 1 && !d.is_boundary(w)) return true;
    }
    return false;
}

}  // namespace

void fuse(ZxDiagram& d, VertexId u, VertexId v) {
    if (d.kind(u) != VertexKind::Z || d.kind(v) != VertexKind::Z ||
        d.edge_type(u, v) != EdgeType::Plain) {
        throw PreconditionViolation("fuse needs two Z spiders joined by a plain edge", v);
    }
    d.add_to_phase(u, d.phase(v));
    d.remove_edge(u, v);
    std::vector<std::pair<VertexId, EdgeType>> moved(d.neighbors(v).begin(), d.neighbors(v).end());
    d.remove_vertex(v);
    for (const auto& [w, t] : moved) {
        if (d.is_boundary(w)) {
            d.add_edge(u, w, t);
        } else {
            d.add_edge_merging(u, w, t);
        }
    }
}

ZxDiagram to_graph_like(ZxDiagram d) {
    d.check_invariants();
    for (VertexId v : d.spiders()) {
        if (d.kind(v) != VertexKind::X) continue;
        d.set_kind(v, VertexKind::Z);
        for (const auto& w : neighbor_list(d, v)) {
            d.set_edge_type(v, w, toggled(*d.edge_type(v, w)));
        }
    }
    for (VertexId u : d.spiders()) {
        if (!d.contains(u)) continue;
        for (;;) {
            VertexId partner = -1;
            for (const auto& [w, t] : d.neighbors(u)) {
                if (t == EdgeType::Plain && d.kind(w) == VertexKind::Z) {
                    partner = w;
                    break;
                }
            }
            if (partner < 0) break;
            fuse(d, u, partner);
        }
    }
    return d;
}

void local_complement_inplace(ZxDiagram& d, VertexId v) {
    if (!d.contains(v) || d.is_boundary(v)) throw PreconditionViolation("local complement on a non-spider", v);
    if (!d.phase(v).is_proper_clifford()) {
        throw PreconditionViolation("local complement needs phase ±π/2", v);
    }
    if (!graph_like_interior(d, v)) {
        throw PreconditionViolation("local complement needs an interior graph-like spider", v);
    }
    // Summing out x_v gives 1 + i^a (-1)^s = √2 e^{iaπ/4} e^{-iaπ/2 (s mod 2)}, and
    // s mod 2 expands into single-vertex phases plus pairwise CZs among the neighbours.
    const int a = d.phase(v).numerator() == 1 ? 1 : -1;
    std::vector<VertexId> nb = neighbor_list(d, v);
    int edge_delta = -static_cast<int>(nb.size());
    d.remove_vertex(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        d.add_to_phase(nb[i], Phase::rational(-a, 2));
        for (std::size_t j = i + 1; j < nb.size(); ++j) edge_delta += d.toggle_hadamard(nb[i], nb[j]);
    }
    d.scalar().multiply_phase(Phase::rational(a, 4));
    d.scalar().add_half_power(1 + edge_delta);
}

ZxDiagram local_complement(ZxDiagram d, VertexId v) {
    local_complement_inplace(d, v);
    return d;
}

void pivot_inplace(ZxDiagram& d, VertexId u, VertexId v) {
    for (VertexId x : {u, v}) {
        if (!d.contains(x) || d.is_boundary(x)) throw PreconditionViolation("pivot on a non-spider", x);
        if (!d.phase(x).is_pauli()) throw PreconditionViolation("pivot needs phases in {0, π}", x);
        if (!graph_like_interior(d, x)) {
            throw PreconditionViolation("pivot needs interior graph-like spiders", x);
        }
    }
    if (d.edge_type(u, v) != EdgeType::Hadamard) throw PreconditionViolation("pivot needs adjacent spiders", v);

    // Σ_{x_u,x_v} (-1)^{x_u p + x_v q + x_u x_v} = 2 (-1)^{pq}, with p = a + s_u, q = b + s_v.
    const bool a = d.phase(u).numerator() != 0;
    const bool b = d.phase(v).numerator() != 0;
    std::vector<VertexId> only_u, only_v, both;
    for (const auto& [w, t] : d.neighbors(u)) {
        if (w == v) continue;
        (d.connected(v, w) ? both : only_u).push_back(w);
    }
    for (const auto& [w, t] : d.neighbors(v)) {
        if (w != u && !d.connected(u, w)) only_v.push_back(w);
    }
    int edge_delta = -static_cast<int>(d.degree(u) + d.degree(v) - 1);
    d.remove_vertex(u);
    d.remove_vertex(v);
    auto toggle_all = [&](const std::vector<VertexId>& xs, const std::vector<VertexId>& ys) {
        for (VertexId x : xs) {
            for (VertexId y : ys) edge_delta += d.toggle_hadamard(x, y);
        }
    };
    toggle_all(only_u, only_v);
    toggle_all(only_u, both);
    toggle_all(only_v, both);
    for (VertexId w : only_u) {
        if (b) d.add_to_phase(w, Phase::pi());
    }
    for (VertexId w : only_v) {
        if (a) d.add_to_phase(w, Phase::pi());
    }
    for (VertexId w : both) {
        if (!(a ^ b)) d.add_to_phase(w, Phase::pi());
    }
    if (a && b) d.scalar() *= Scalar(-1.0);
    d.scalar().add_half_power(2 + edge_delta);
}

ZxDiagram pivot(ZxDiagram d, VertexId u, VertexId v) {
    pivot_inplace(d, u, v);
    return d;
}

std::size_t remove_isolated_spiders(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId v : d.spiders()) {
        if (d.degree(v) != 0) continue;
        d.scalar() *= Scalar(1.0 + d.phase(v).exp_i());
        d.remove_vertex(v);
        ++count;
    }
    return count;
}

std::size_t identity_removal(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId v : d.spiders()) {
        if (!d.contains(v) || !d.phase(v).is_zero() || d.degree(v) != 2) continue;
        if (!graph_like_interior(d, v)) continue;
        std::vector<VertexId> nb = neighbor_list(d, v);
        // H · I · H = I: the two neighbours become joined by a plain wire and fuse.
        d.remove_vertex(v);
        d.add_edge_merging(nb[0], nb[1], EdgeType::Plain);
        fuse(d, nb[0], nb[1]);
        ++count;
    }
    return count;
}

std::size_t state_copy_pass(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId u : d.spiders()) {
        if (!d.contains(u) || d.degree(u) != 1 || !d.phase(u).is_pauli() || !graph_like_interior(d, u)) continue;
        const VertexId v = d.neighbors(u).begin()->first;
        if (!graph_like_interior(d, v)) continue;
        // Summing out x_u gives 2 δ(x_v = k) / √2: x_v is pinned to k, as in branch k of
        // a vertex cut at v, with an extra √2.
        const int k = static_cast<int>(d.phase(u).numerator() % 2);
        d.remove_vertex(u);
        Scalar coef = Scalar::sqrt2_pow(1 - static_cast<int>(d.degree(v)));
        if (k) {
            coef.multiply_phase(d.phase(v));
            for (const auto& [w, t] : d.neighbors(v)) d.add_to_phase(w, Phase::pi());
        }
        d.remove_vertex(v);
        d.scalar() *= coef;
        ++count;
    }
    return count;
}

std::size_t local_complement_pass(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId v : d.spiders()) {
        if (!d.contains(v) || !d.phase(v).is_proper_clifford() || !graph_like_interior(d, v)) continue;
        local_complement_inplace(d, v);
        ++count;
    }
    return count;
}

std::size_t pivot_pass(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId u : d.spiders()) {
        if (!d.contains(u) || !d.phase(u).is_pauli() || !graph_like_interior(d, u)) continue;
        VertexId partner = -1;
        for (const auto& [w, t] : d.neighbors(u)) {
            if (d.phase(w).is_pauli() && graph_like_interior(d, w)) {
                partner = w;
                break;
            }
        }
        if (partner < 0) continue;
        pivot_inplace(d, u, partner);
        ++count;
    }
    return count;
}

std::size_t gadget_fusion_pass(ZxDiagram& d) {
    std::size_t count = 0;
    for (bool merged = true; merged;) {
        merged = false;
        // key: the hub's neighbourhood without its leaf -> (hub, leaf)
        std::map<std::vector<VertexId>, std::pair<VertexId, VertexId>> seen;
        for (VertexId leaf : d.spiders()) {
            if (d.degree(leaf) != 1 || !graph_like_interior(d, leaf)) continue;
            VertexId hub = d.neighbors(leaf).begin()->first;
            if (d.degree(hub) < 2 || !d.phase(hub).is_pauli() || !graph_like_interior(d, hub)) continue;
            std::vector<VertexId> key;
            int leaves = 0;
            for (const auto& [w, t] : d.neighbors(hub)) {
                if (d.degree(w) == 1) ++leaves;
                if (w != leaf) key.push_back(w);
            }
            if (leaves != 1) continue;
            auto [it, fresh] = seen.emplace(key, std::make_pair(hub, leaf));
            if (fresh) continue;
            auto [hub1, leaf1] = it->second;
            // A gadget with hub phase aπ and leaf θ sums to 2 e^{iθ t}, t = parity(a + s).
            const Phase theta = d.phase(leaf);
            if (d.phase(hub1) == d.phase(hub)) {
                d.add_to_phase(leaf1, theta);
            } else {
                d.add_to_phase(leaf1, -theta);
                d.scalar().multiply_phase(theta);
            }
            d.scalar().add_half_power(1 - static_cast<int>(key.size()));
            d.remove_vertex(leaf);
            d.remove_vertex(hub);
            ++count;
            merged = true;
            break;
        }
    }
    return count;
}

std::size_t gadget_pivot_pass(ZxDiagram& d) {
    std::size_t count = 0;
    for (VertexId u : d.spiders()) {
        if (!d.contains(u) || !d.phase(u).is_pauli() || !graph_like_interior(d, u)) continue;
        if (has_leaf_neighbor(d, u)) continue;
        VertexId target = -1;
        for (const auto& [w, t] : d.neighbors(u)) {
            if (!d.phase(w).is_clifford() && d.degree(w) >= 2 && graph_like_interior(d, w)) {
                target = w;
                break;
            }
        }
        if (target < 0) continue;
        // Unfuse the phase of `target` into a new gadget, then pivot on the Pauli pair.
        const Phase alpha = d.phase(target);
        d.set_phase(target, Phase());
        VertexId hub = d.add_vertex(VertexKind::Z);
        VertexId leaf = d.add_vertex(VertexKind::Z, alpha);
        d.add_edge(target, hub, EdgeType::Hadamard);
        d.add_edge(hub, leaf, EdgeType::Hadamard);
        pivot_inplace(d, u, target);
        ++count;
    }
    return count;
}

std::size_t clifford_simp(ZxDiagram& d) {
    std::size_t total = 0;
    for (;;) {
        std::size_t n = remove_isolated_spiders(d);
        n += identity_removal(d);
        n += state_copy_pass(d);
        n += local_complement_pass(d);
        n += pivot_pass(d);
        n += remove_isolated_spiders(d);
        if (n == 0) break;
        total += n;
    }
    return total;
}

ZxDiagram full_reduce(ZxDiagram d, const ReduceOptions& options) {
    if (!d.is_graph_like()) throw PreconditionViolation("full_reduce needs a graph-like diagram");
    constexpr int kMaxRounds = 1 << 20;
    for (int round = 0;; ++round) {
        if (round == kMaxRounds) throw NonConvergence("full_reduce did not reach a fixed point");
        std::size_t n = clifford_simp(d);
        n += gadget_fusion_pass(d);
        n += clifford_simp(d);
        if (options.allow_new_vertices) n += gadget_pivot_pass(d);
        if (n == 0) break;
    }
    return d;
}

}  // namespace zxcut
