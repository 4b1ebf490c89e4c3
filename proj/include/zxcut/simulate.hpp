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


// Recursive amplitude evaluation by width-guided cutting.

#ifndef ZXCUT_SIMULATE_HPP
#define ZXCUT_SIMULATE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

enum class WidthMode { TreeWidth, RankWidth };

const char* mode_name(WidthMode m);
WidthMode parse_mode(const std::string& name);

/// Algorithm 1: tree-width, cut down to single spiders. Algorithm 2: tree-width with
/// separators weighted by non-Clifford spiders and Clifford leaves. Algorithms 3 and 4
/// are the rank-width counterparts.
struct SimConfig {
    WidthMode mode = WidthMode::RankWidth;
    bool use_clifford_base = true;
    bool use_mixed = false;
    /// Leaves are diagrams with at most this many non-Clifford spiders; they are
    /// simplified and any remaining non-Clifford spider is vertex-cut.
    int hybrid_threshold = 0;
    std::uint64_t seed = 0;
    int parallelism = 1;
    long anneal_steps = 20000;
    /// full_reduce after every cut (Clifford-base variants only).
    bool resimplify = true;
    /// Re-anneal the rank decomposition on every sub-diagram instead of restricting the
    /// one computed up front.
    bool recompute_per_level = false;
};

int algorithm_number(const SimConfig& cfg);

struct SimStats {
    int algorithm = 0;
    std::size_t n_spiders = 0;
    /// Non-Clifford spiders once the diagram is prepared (after full_reduce for the
    /// Clifford-base variants).
    std::size_t nc = 0;
    std::uint64_t leaves = 0;
    std::uint64_t decompositions = 0;
    int max_depth = 0;
    /// Largest cut score (log2 of the branch count) used at each recursion depth.
    std::vector<int> level_widths;
    int width_used = 0;
    /// log2(leaves) / nc, or 0 when nc = 0.
    double alpha = 0;
    double wall_ms = 0;
    /// log2 of the leaf bound checked for this run; see leaf_bound_log2.
    double bound_log2 = 0;
    bool within_bound = true;
    std::uint64_t seed = 0;
};

struct SimResult {
    std::complex<double> amplitude;
    Scalar value;
    SimStats stats;
};

/// Amplitude of a closed diagram. Throws OpenDiagram when `d` has boundaries.
SimResult simulate(const ZxDiagram& d, const SimConfig& cfg);

/// log2 of the leaf bound N^{e + 2}, N = max(2, size) with size the non-Clifford count
/// (Clifford-base variants) or the spider count, and e = log_{3/2}(4) · w_max in
/// rank-width mode or s_max in tree-width mode.
double leaf_bound_log2(const SimConfig& cfg, std::size_t size, int width_used);

/// Run record: algorithm, n_spiders, nc, width_used, leaves, alpha, wall_time_ms,
/// amplitude_re, amplitude_im, seed.
std::string stats_json(const SimResult& r);

}  // namespace zxcut

#endif  // ZXCUT_SIMULATE_HPP
