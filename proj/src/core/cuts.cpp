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

#include "zxcut/cuts.hpp"

#include <algorithm>
#include <set>

#include "zxcut/error.hpp"

namespace zxcut {

namespace {

void require_cuttable(const ZxDiagram& d, VertexId v) {
    if (!d.contains(v)) throw PreconditionViolation("vertex cut on a missing vertex", v);
    if (d.is_boundary(v)) throw PreconditionViolation("vertex cut on a boundary vertex", v);
    if (d.kind(v) != VertexKind::Z) throw PreconditionViolation("vertex cut needs a Z spider", v);
    for (const auto& [w, t] : d.neighbors(v)) {
        if (d.is_boundary(w)) throw PreconditionViolation("vertex cut on a boundary-adjacent spider", v);
        if (t != EdgeType::Hadamard || d.kind(w) != VertexKind::Z) {
            throw PreconditionViolation("vertex cut needs a graph-like neighbourhood", v);
        }
    }
}

}  // namespace

Scalar vertex_cut_branch(ZxDiagram& d, VertexId v, int p) {
    require_cuttable(d, v);
    // Fixing x_v = p leaves e^{ipα} Π_w (-1)^{p x_w}: a pπ shift on each neighbour.
    Scalar coef = Scalar::sqrt2_pow(-static_cast<int>(d.degree(v)));
    if (p) {
        coef.multiply_phase(d.phase(v));
        for (const auto& [w, t] : d.neighbors(v)) d.add_to_phase(w, Phase::pi());
    }
    d.remove_vertex(v);
    return coef;
}

std::array<Term, 2> vertex_cut(const ZxDiagram& d, VertexId v) {
    require_cuttable(d, v);
    ZxDiagram d0 = d;
    ZxDiagram d1 = d;
    Scalar c0 = vertex_cut_branch(d0, v, 0);
    Scalar c1 = vertex_cut_branch(d1, v, 1);
    return {Term{c0, std::move(d0)}, Term{c1, std::move(d1)}};
}

ZxDiagram toggle_bipartite(ZxDiagram d, std::span<const VertexId> a, std::span<const VertexId> b) {
    for (VertexId x : a) {
        for (VertexId y : b) d.toggle_hadamard(x, y);
    }
    return d;
}

std::vector<Term> bipartite_sum_cut(const ZxDiagram& d, std::span<const VertexId> a,
                                    std::span<const VertexId> b) {
    std::set<VertexId> left(a.begin(), a.end());
    for (VertexId y : b) {
        if (left.contains(y)) throw PreconditionViolation("bipartite sum sides overlap", y);
    }
    for (auto side : {a, b}) {
        for (VertexId x : side) {
            if (!d.contains(x) || d.kind(x) != VertexKind::Z) {
                throw PreconditionViolation("bipartite sum needs Z spiders", x);
            }
        }
    }
    if (a.empty() || b.empty()) return {Term{Scalar::one(), d}};

    // (-1)^{(Σ_A x)(Σ_B x)} = (1/2) Σ_{k,j} (-1)^{kj} (-1)^{k Σ_A x} (-1)^{j Σ_B x}.
    int present = 0;
    for (VertexId x : a) {
        for (VertexId y : b) present += d.connected(x, y);
    }
    const int pairs = static_cast<int>(a.size() * b.size());
    const int toggled_minus_original = pairs - 2 * present;  // |E_t| - |E|
    std::vector<Term> terms;
    terms.reserve(4);
    for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j) {
            ZxDiagram t = d;
            if (k) {
                for (VertexId x : a) t.add_to_phase(x, Phase::pi());
            }
            if (j) {
                for (VertexId y : b) t.add_to_phase(y, Phase::pi());
            }
            Scalar coef(k && j ? -1.0 : 1.0, -2 - toggled_minus_original);
            terms.push_back(Term{coef, std::move(t)});
        }
    }
    return terms;
}

}  // namespace zxcut
