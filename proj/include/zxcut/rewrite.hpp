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

#ifndef ZXCUT_REWRITE_HPP
#define ZXCUT_REWRITE_HPP

#include "zxcut/diagram.hpp"

namespace zxcut {

/// Color-changes every X spider, fuses every plain edge between Z spiders, and folds
/// parallel edges and self-loops. The result is amplitude-equal and graph-like.
ZxDiagram to_graph_like(ZxDiagram d);

/// Fuses Z spider `v` into Z spider `u` across the plain edge between them; `u` survives.
void fuse(ZxDiagram& d, VertexId u, VertexId v);

/// Local complementation about an interior ±π/2 spider `v`, removing it.
/// Throws PreconditionViolation otherwise.
void local_complement_inplace(ZxDiagram& d, VertexId v);
ZxDiagram local_complement(ZxDiagram d, VertexId v);

/// Pivot about adjacent interior Pauli spiders `u`, `v`, removing both.
void pivot_inplace(ZxDiagram& d, VertexId u, VertexId v);
ZxDiagram pivot(ZxDiagram d, VertexId u, VertexId v);

struct ReduceOptions {
    /// The gadget pivot introduces fresh vertex ids; disable it when an external
    /// structure keyed by vertex id (e.g. a rank decomposition) must stay valid.
    bool allow_new_vertices = true;
};

/// Individual passes; each returns the number of rule applications.
std::size_t remove_isolated_spiders(ZxDiagram& d);
std::size_t identity_removal(ZxDiagram& d);
/// A degree-one Pauli spider (phase kπ) pins its neighbour v to k: both are removed,
/// e^{ikα_v} goes to the scalar and kπ to every other neighbour of v.
std::size_t state_copy_pass(ZxDiagram& d);
std::size_t local_complement_pass(ZxDiagram& d);
std::size_t pivot_pass(ZxDiagram& d);
std::size_t gadget_fusion_pass(ZxDiagram& d);
std::size_t gadget_pivot_pass(ZxDiagram& d);

/// Interior Clifford simplification: identity removal, state copy, local complementation,
/// pivoting, isolated-spider evaluation, to a fixed point.
std::size_t clifford_simp(ZxDiagram& d);

/// Full simplification of a graph-like diagram. Closed Clifford diagrams reduce to an
/// empty diagram whose scalar is the amplitude.
ZxDiagram full_reduce(ZxDiagram d, const ReduceOptions& options = {});

}  // namespace zxcut

#endif  // ZXCUT_REWRITE_HPP
