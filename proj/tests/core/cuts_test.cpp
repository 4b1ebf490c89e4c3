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

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/random_diagrams.hpp"
#include "zxcut/cuts.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/rewrite.hpp"

namespace zxcut {
namespace {

using cd = std::complex<double>;
using testing::close;
using testing::PhaseMix;
using testing::random_graph_like;

cd weighted_sum(std::span<const Term> terms) {
    cd total = 0;
    for (const Term& t : terms) total += t.coefficient.to_complex() * contract_oracle(t.diagram);
    return total;
}

TEST(VertexCut, IsolatedSpider) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::real(0.4));
    auto terms = vertex_cut(d, 0);
    EXPECT_EQ(terms[0].diagram.num_vertices(), 0u);
    EXPECT_EQ(terms[1].diagram.num_vertices(), 0u);
    cd s = terms[0].coefficient.to_complex() + terms[1].coefficient.to_complex();
    EXPECT_TRUE(close(s, 1.0 + std::polar(1.0, 0.4), 1e-14));
}

TEST(VertexCut, SingleNeighbour) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::real(0.4));
    d.add_vertex(VertexKind::Z, Phase::real(1.3));
    d.add_edge(0, 1, EdgeType::Hadamard);
    auto terms = vertex_cut(d, 0);
    EXPECT_EQ(terms[1].diagram.phase(1).radians(), Phase::real(1.3 + std::numbers::pi).radians());
    EXPECT_TRUE(close(weighted_sum(terms), contract_oracle(d), 1e-13));
}

TEST(VertexCut, PreservesAmplitude) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
        int n = i < 100 ? 8 : 1 + i % 12;
        ZxDiagram d = random_graph_like(rng, n, 0.4, PhaseMix::Mixed);
        VertexId v = static_cast<VertexId>(rng() % n);
        auto terms = vertex_cut(d, v);
        for (const Term& t : terms) t.diagram.check_invariants();
        ASSERT_TRUE(close(weighted_sum(terms), contract_oracle(d), 1e-10)) << "trial " << i;
    }
}

TEST(VertexCut, RejectsBoundaryAndNonGraphLike) {
    ZxDiagram d;
    VertexId z = d.add_vertex(VertexKind::Z);
    VertexId b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(z, b, EdgeType::Plain);
    EXPECT_THROW(vertex_cut(d, b), PreconditionViolation);
    EXPECT_THROW(vertex_cut(d, z), PreconditionViolation);
    ZxDiagram e;
    e.add_vertex(VertexKind::Z);
    e.add_vertex(VertexKind::X);
    e.add_edge(0, 1, EdgeType::Hadamard);
    EXPECT_THROW(vertex_cut(e, 0), PreconditionViolation);
}

TEST(BipartiteSum, SingletonSidesGiveOneEdge) {
    const double a = 0.3;
    const double b = 2.1;
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::real(a));
    d.add_vertex(VertexKind::Z, Phase::real(b));
    std::vector<VertexId> sa{0};
    std::vector<VertexId> sb{1};
    auto terms = bipartite_sum_cut(d, sa, sb);
    ASSERT_EQ(terms.size(), 4u);
    cd ea = std::polar(1.0, a);
    cd eb = std::polar(1.0, b);
    cd expect = (1.0 + ea + eb - ea * eb) / std::sqrt(2.0);
    EXPECT_TRUE(close(weighted_sum(terms), expect, 1e-13));
    ZxDiagram edge = d;
    edge.add_edge(0, 1, EdgeType::Hadamard);
    EXPECT_TRUE(close(weighted_sum(terms), contract_oracle(edge), 1e-13));
}

TEST(BipartiteSum, EmptySideIsIdentity) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::rational(1, 4));
    std::vector<VertexId> sa{0};
    std::vector<VertexId> none;
    auto terms = bipartite_sum_cut(d, sa, none);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].coefficient, Scalar::one());
    EXPECT_EQ(structural_fingerprint(terms[0].diagram), structural_fingerprint(d));
}

TEST(BipartiteSum, OverlapRejected) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z);
    std::vector<VertexId> s{0};
    EXPECT_THROW(bipartite_sum_cut(d, s, s), PreconditionViolation);
}

TEST(BipartiteSum, PreservesAmplitude) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        int n = i < 100 ? 8 : 2 + i % 11;
        ZxDiagram d = random_graph_like(rng, n, 0.45, PhaseMix::Mixed);
        std::vector<VertexId> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        std::size_t na = i < 100 ? 2 : 1 + rng() % (n - 1);
        std::size_t nb = i < 100 ? 2 : 1 + rng() % (n - na);
        std::vector<VertexId> a(ids.begin(), ids.begin() + na);
        std::vector<VertexId> b(ids.begin() + na, ids.begin() + na + nb);
        auto terms = bipartite_sum_cut(d, a, b);
        ASSERT_TRUE(close(weighted_sum(terms), contract_oracle(toggle_bipartite(d, a, b)), 1e-10))
            << "trial " << i;
    }
}

}  // namespace
}  // namespace zxcut
