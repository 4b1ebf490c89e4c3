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


#include "zxcut/branching.hpp"

#include <string>

#include "zxcut/cuts.hpp"
#include "zxcut/error.hpp"
#include "zxcut/f2linalg.hpp"

namespace zxcut {

Scalar bipartite_branch(ZxDiagram& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b, int k,
                        int j) {
    if (a.empty() || b.empty()) throw PreconditionViolation("bipartite branch with an empty side");
    int present = 0;
    for (VertexId x : a) {
        for (VertexId y : b) {
            if (x == y) throw PreconditionViolation("bipartite branch sides overlap", x);
            present += d.toggle_hadamard(x, y) < 0;
        }
    }
    if (k) {
        for (VertexId x : a) d.add_to_phase(x, Phase::pi());
    }
    if (j) {
        for (VertexId y : b) d.add_to_phase(y, Phase::pi());
    }
    // The sum over (k, j) of the toggled diagram toggles back; the √2 power offsets the
    // change in normalized H-edge count.
    const int pairs = static_cast<int>(a.size() * b.size());
    return Scalar(k && j ? -1.0 : 1.0, pairs - 2 * present - 2);
}

std::uint64_t CutAction::branches() const {
    if (score() >= 63) throw SizeExceeded("cut action with " + std::to_string(score()) + " branch bits");
    return std::uint64_t{1} << score();
}

CutAction vertex_action(std::vector<VertexId> vertices) {
    CutAction action;
    action.deleted = std::move(vertices);
    return action;
}

CutAction partition_action(const Graph& g, const Bits& a, const Bits& b, bool mixed) {
    if (a.intersects(b)) throw PreconditionViolation("partition sides overlap");
    CutAction action;
    if (mixed) {
        MixedCut cut = mixed_cut(g, a, b);
        action.deleted = std::move(cut.deleted);
        action.pairs = std::move(cut.pairs);
        return action;
    }
    const std::vector<int> rows = to_indices(a);
    const std::vector<int> cols = to_indices(b);
    for (const auto& [r, c] : bipartite_decomposition(g.biadjacency(a, b)).pairs) {
        std::vector<VertexId> p;
        std::vector<VertexId> q;
        for (int i : r) p.push_back(rows[static_cast<std::size_t>(i)]);
        for (int i : c) q.push_back(cols[static_cast<std::size_t>(i)]);
        action.pairs.emplace_back(std::move(p), std::move(q));
    }
    return action;
}

CutAction partition_action(const ZxDiagram& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                           bool mixed) {
    const std::size_t n = d.id_bound();
    for (VertexId v : a) {
        if (!d.contains(v) || d.is_boundary(v)) throw PreconditionViolation("partition side holds a non-spider", v);
    }
    for (VertexId v : b) {
        if (!d.contains(v) || d.is_boundary(v)) throw PreconditionViolation("partition side holds a non-spider", v);
    }
    return partition_action(id_graph(d), from_indices(n, a), from_indices(n, b), mixed);
}

Scalar apply_branch(ZxDiagram& d, const CutAction& action, std::uint64_t index) {
    Scalar coef;
    int bit = 0;
    for (VertexId v : action.deleted) coef *= vertex_cut_branch(d, v, static_cast<int>((index >> bit++) & 1));
    for (const auto& [p, q] : action.pairs) {
        const int k = static_cast<int>((index >> bit++) & 1);
        const int j = static_cast<int>((index >> bit++) & 1);
        coef *= bipartite_branch(d, p, q, k, j);
    }
    return coef;
}

Scalar evaluate_leaf(ZxDiagram d, const ReduceOptions& options) {
    d = full_reduce(std::move(d), options);
    const std::vector<VertexId> left = d.spiders();
    if (left.empty()) return d.scalar();
    VertexId v = left.front();
    for (VertexId u : left) {
        if (is_non_clifford(d, u)) {
            v = u;
            break;
        }
    }
    Scalar total = Scalar::zero();
    for (int p = 0; p < 2; ++p) {
        ZxDiagram c = d;
        const Scalar coef = vertex_cut_branch(c, v, p);
        total = total + coef * evaluate_leaf(std::move(c), options);
    }
    return total;
}

}  // namespace zxcut
