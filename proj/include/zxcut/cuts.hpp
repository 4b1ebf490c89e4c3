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

#ifndef ZXCUT_CUTS_HPP
#define ZXCUT_CUTS_HPP

#include <array>
#include <span>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

/// One summand of a decomposition: the value contributed is coefficient · value(diagram).
struct Term {
    Scalar coefficient;
    ZxDiagram diagram;
};

/// Splits interior spider `v` into its two basis branches.
///
/// Term p has `v` deleted and pπ added to each neighbour; its coefficient is
/// e^{ipα_v} · 2^{-deg(v)/2}. The two weighted values sum to the value of `d`.
/// Throws PreconditionViolation for boundary vertices or non-graph-like neighbourhoods.
std::array<Term, 2> vertex_cut(const ZxDiagram& d, VertexId v);

/// In-place form: applies branch `p` of the vertex cut and returns its coefficient.
Scalar vertex_cut_branch(ZxDiagram& d, VertexId v, int p);

/// Writes the complete bipartite H-edge toggle between `a` and `b` as a 4-term sum.
///
/// Term (k, j) is `d` with kπ added to every phase in `a` and jπ to every phase in `b`,
/// coefficient (1/2)(-1)^{kj} times the √2 power that compensates the change in
/// H-edge count. The weighted sum equals `d` with K_{a,b} toggled (mod 2).
/// Returns a single identity term when either side is empty; throws
/// PreconditionViolation when the sides overlap.
std::vector<Term> bipartite_sum_cut(const ZxDiagram& d, std::span<const VertexId> a,
                                    std::span<const VertexId> b);

/// `d` with the complete bipartite H-edge set between `a` and `b` toggled. No scalar
/// correction: this is the plain graph operation that bipartite_sum_cut evaluates.
ZxDiagram toggle_bipartite(ZxDiagram d, std::span<const VertexId> a, std::span<const VertexId> b);

}  // namespace zxcut

#endif  // ZXCUT_CUTS_HPP
