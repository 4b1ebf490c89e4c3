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


#ifndef ZXCUT_ANNEAL_HPP
#define ZXCUT_ANNEAL_HPP

#include <cstdint>

#include "zxcut/rank_decomposition.hpp"

namespace zxcut {

struct AnnealOptions {
    Objective objective = Objective::CutRank;
    long steps = 100000;
    std::uint64_t seed = 0;
    /// Geometric cooling factor applied every step.
    double cooling = 0.999;
    /// 0 picks the temperature at which a typical worsening move is accepted half the time.
    double initial_temperature = 0.0;
    /// Independent chains; the best is kept, ties going to the lowest chain.
    int chains = 1;
};

struct AnnealResult {
    RankDecomposition rd;
    int width = 0;
    /// Width of the three-thirds starting tree.
    int seed_width = 0;
};

/// Simulated annealing over rank decompositions of g restricted to `vertices`.
/// Moves: leaf relocation and subtree swap. The energy is the width plus a tie-break in
/// [0, 1) favouring lower edge scores overall. The three-thirds tree is the starting
/// point and the best tree seen is returned, so the result is never worse than it.
AnnealResult anneal_rank_decomposition(const Graph& g, const Bits& vertices, const AnnealOptions& options);
AnnealResult anneal_rank_decomposition(const Graph& g, const AnnealOptions& options);

/// Focused variant: one leaf per special vertex; every other vertex is attached to some
/// leaf and an extra move reassigns it. Starts with all non-special vertices on the first
/// leaf, where every cut scores below |special|. Needs |special| >= 1.
AnnealResult anneal_focused(const Graph& g, const Bits& vertices, const Bits& special,
                            const AnnealOptions& options);

}  // namespace zxcut

#endif  // ZXCUT_ANNEAL_HPP
