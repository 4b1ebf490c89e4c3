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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/random_diagrams.hpp"
#include "zxcut/branching.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/simulate.hpp"

namespace zxcut {
namespace {

using testing::close;
using testing::PhaseMix;

std::vector<SimConfig> all_variants(bool mixed) {
    std::vector<SimConfig> out;
    for (WidthMode m : {WidthMode::TreeWidth, WidthMode::RankWidth}) {
        for (bool base : {false, true}) {
            SimConfig c;
            c.mode = m;
            c.use_clifford_base = base;
            c.use_mixed = mixed && m == WidthMode::RankWidth;
            c.anneal_steps = 2000;
            c.seed = 7;
            out.push_back(c);
        }
    }
    return out;
}

TEST(Branching, BipartiteBranchesSumToInput) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        ZxDiagram d = testing::random_graph_like(rng, 7, 0.5, PhaseMix::Mixed);
        std::vector<VertexId> a{0, 1, 2};
        std::vector<VertexId> b{4, 5};
        Scalar sum = Scalar::zero();
        for (int k = 0; k < 2; ++k) {
            for (int j = 0; j < 2; ++j) {
                ZxDiagram c = d;
                Scalar coef = bipartite_branch(c, a, b, k, j);
                sum = sum + coef * Scalar(contract_oracle(c));
            }
        }
        ASSERT_TRUE(close(sum.to_complex(), contract_oracle(d), 1e-10)) << trial;
    }
}

TEST(Branching, PartitionActionRemovesCrossEdges) {
    std::mt19937_64 rng(12);
    for (bool mixed : {false, true}) {
        for (int trial = 0; trial < 100; ++trial) {
            ZxDiagram d = testing::random_graph_like(rng, 8, 0.6, PhaseMix::Generic);
            std::vector<VertexId> a{0, 2, 4, 6};
            std::vector<VertexId> b{1, 3, 5, 7};
            const CutAction act = partition_action(d, a, b, mixed);
            Scalar sum = Scalar::zero();
            for (std::uint64_t i = 0; i < act.branches(); ++i) {
                ZxDiagram c = d;
                Scalar coef = apply_branch(c, act, i);
                for (VertexId x : a) {
                    for (VertexId y : b) {
                        if (c.contains(x) && c.contains(y)) {
                            ASSERT_FALSE(c.connected(x, y));
                        }
                    }
                }
                sum = sum + coef * Scalar(contract_oracle(c));
            }
            ASSERT_TRUE(close(sum.to_complex(), contract_oracle(d), 1e-10)) << trial;
        }
    }
}

TEST(Branching, LeafEvaluatorMatchesOracle) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        ZxDiagram d = testing::random_graph_like(rng, 8, 0.4, PhaseMix::Mixed);
        ASSERT_TRUE(close(evaluate_leaf(d).to_complex(), contract_oracle(d), 1e-10)) << trial;
    }
}

TEST(Simulate, SingleSpider) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::real(0.3));
    for (const SimConfig& c : all_variants(false)) {
        SimResult r = simulate(d, c);
        EXPECT_TRUE(close(r.amplitude, 1.0 + std::polar(1.0, 0.3), 1e-12));
        EXPECT_EQ(r.stats.decompositions, 0u);
    }
}

TEST(Simulate, OpenDiagramThrows) {
    ZxDiagram d;
    VertexId b = d.add_vertex(VertexKind::Boundary);
    VertexId z = d.add_vertex(VertexKind::Z);
    d.add_edge(b, z, EdgeType::Plain);
    EXPECT_THROW(simulate(d, SimConfig{}), OpenDiagram);
}

TEST(Simulate, CliffordNeedsNoCuts) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        ZxDiagram d = testing::random_general(rng, 10, 0.4, PhaseMix::Clifford);
        for (const SimConfig& c : all_variants(true)) {
            if (!c.use_clifford_base) continue;
            SimResult r = simulate(d, c);
            EXPECT_EQ(r.stats.decompositions, 0u);
            EXPECT_EQ(r.stats.leaves, 1u);
            EXPECT_TRUE(close(r.amplitude, contract_oracle(d), 1e-9));
        }
    }
}

TEST(Simulate, AllVariantsMatchOracle) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 11;
        ZxDiagram d = trial % 2 ? testing::random_general(rng, n, 0.45, PhaseMix::Mixed)
                                : testing::random_graph_like(rng, n, 0.45, PhaseMix::Mixed);
        const auto want = contract_oracle(d);
        for (bool mixed : {false, true}) {
            for (const SimConfig& c : all_variants(mixed)) {
                SimResult r = simulate(d, c);
                ASSERT_TRUE(close(r.amplitude, want, 1e-8))
                    << "trial " << trial << " algorithm " << r.stats.algorithm << " mixed " << mixed;
                EXPECT_TRUE(r.stats.within_bound) << r.stats.leaves << " " << r.stats.bound_log2;
            }
        }
    }
}

TEST(Simulate, ParallelMatchesSequentialExactly) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        ZxDiagram d = testing::random_graph_like(rng, 12, 0.4, PhaseMix::Generic);
        for (SimConfig c : all_variants(true)) {
            SimResult one = simulate(d, c);
            c.parallelism = 8;
            SimResult many = simulate(d, c);
            EXPECT_EQ(one.value, many.value);
            EXPECT_EQ(one.stats.leaves, many.stats.leaves);
        }
    }
}

TEST(Simulate, HybridThreshold) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ZxDiagram d = testing::random_graph_like(rng, 10, 0.4, PhaseMix::CliffordT);
        SimConfig c;
        c.anneal_steps = 2000;
        c.hybrid_threshold = 3;
        SimResult r = simulate(d, c);
        EXPECT_TRUE(close(r.amplitude, contract_oracle(d), 1e-9));
    }
}

TEST(Simulate, StatsJsonHasAllFields) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::rational(1, 4));
    const std::string j = stats_json(simulate(d, SimConfig{}));
    for (const char* k : {"algorithm", "n_spiders", "nc", "width_used", "leaves", "alpha", "wall_time_ms",
                          "amplitude_re", "amplitude_im", "seed"}) {
        EXPECT_NE(j.find(std::string("\"") + k + "\""), std::string::npos) << k;
    }
}

}  // namespace
}  // namespace zxcut
