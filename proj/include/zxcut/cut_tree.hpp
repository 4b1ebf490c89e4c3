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


// Cut-tree planning: choose a cut per sub-diagram, count terms exactly, then execute.

#ifndef ZXCUT_CUT_TREE_HPP
#define ZXCUT_CUT_TREE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zxcut/branching.hpp"
#include "zxcut/diagram.hpp"
#include "zxcut/rank_decomposition.hpp"

namespace zxcut {

using BigInt = boost::multiprecision::cpp_int;

/// How a candidate cut is drawn at each node. Inverse: probability proportional to
/// 1 / (α_eff T). Boltzmann: proportional to exp(-(α_eff - α_min) / T).
enum class Selection { Inverse, Boltzmann };

struct PlannerOptions {
    Selection selection = Selection::Inverse;
    double temperature = 0.05;
    int trees = 5000;
    std::uint64_t seed = 0;
    /// Mixed scores cuts by the greedy mixed decomposition; CutRank by plain bipartite sums.
    Objective objective = Objective::Mixed;
};

enum class NodeKind { Leaf, Split, Cut };

struct CutTreeNode {
    NodeKind kind = NodeKind::Leaf;
    std::vector<VertexId> vertices;
    std::size_t nc = 0;
    CutAction action;
    /// Effective exponent of the chosen cut; 0 for leaves and splits.
    double alpha_eff = 0;
    std::vector<int> children;
    BigInt terms = 1;
};

/// Nodes in depth-first order, root first. Leaves hold at most one non-Clifford spider
/// and stand for one evaluation. A cut node with score w has 2^w branches, each
/// evaluating every child: terms = 2^w · Σ children terms. A split node is the product
/// of its connected components: terms = Σ children terms.
struct CutTree {
    std::vector<CutTreeNode> nodes;
    BigInt term_count = 1;
    std::size_t nc = 0;
    /// log2(term_count) / nc, or 0 when nc = 0.
    double alpha = 0;
    int max_score = 0;
    std::uint64_t fingerprint = 0;
};

/// Samples opt.trees cut trees and keeps the one with the fewest terms (first found on
/// ties). At each node every cut of `rd` restricted to the node's spiders is a candidate,
/// unless it leaves a side with as many non-Clifford spiders as the node; one is drawn
/// according to opt.selection. No cut is executed.
/// `rd` must cover exactly the spiders of `d`, indexed by vertex id.
CutTree build_cut_tree(const ZxDiagram& d, const RankDecomposition& rd, const PlannerOptions& opt);

/// Anneals a rank decomposition of d (objective from `opt`, `anneal_steps` steps) first.
CutTree build_cut_tree(const ZxDiagram& d, const PlannerOptions& opt, long anneal_steps);

struct Execution {
    std::complex<double> amplitude;
    Scalar value;
    std::uint64_t leaf_evaluations = 0;
};

/// Evaluates `d` along `ct`. Branches of the first cut run on up to `parallelism`
/// threads; results are summed in branch order, so the value does not depend on the
/// thread count. Throws PlanMismatch if `d` is not the diagram the plan was built for.
Execution execute_cut_tree(const ZxDiagram& d, const CutTree& ct, int parallelism = 1);

std::string to_json(const CutTree& ct);

}  // namespace zxcut

#endif  // ZXCUT_CUT_TREE_HPP
