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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"

namespace zxcut {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// s_a^T H s_b with H the normalized Hadamard, as an explicit 2x2 product.
cd h_pair(double a, double b) {
    Eigen::Vector2cd sa(1.0, std::polar(1.0, a));
    Eigen::Vector2cd sb(1.0, std::polar(1.0, b));
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    return sa.transpose() * h * sb;
}

TEST(ContractOracle, SingleSpider) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z);
    EXPECT_NEAR(std::abs(contract_oracle(d) - cd(2, 0)), 0, 1e-14);
    ZxDiagram e;
    e.add_vertex(VertexKind::Z, Phase::pi());
    EXPECT_NEAR(std::abs(contract_oracle(e)), 0, 1e-14);
    ZxDiagram x;
    x.add_vertex(VertexKind::X, Phase::rational(1, 2));
    EXPECT_NEAR(std::abs(contract_oracle(x) - cd(1, 1)), 0, 1e-14);
}

TEST(ContractOracle, TwoSpidersAcrossHadamardEdge) {
    const double a = kPi / 2;
    const double b = kPi / 2;
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::rational(1, 2));
    d.add_vertex(VertexKind::Z, Phase::rational(1, 2));
    d.add_edge(0, 1, EdgeType::Hadamard);
    cd expect = (1.0 + std::polar(1.0, a) + std::polar(1.0, b) - std::polar(1.0, a + b)) / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(contract_oracle(d) - expect), 0, 1e-14);
    EXPECT_NEAR(std::abs(contract_oracle(d) - h_pair(a, b)), 0, 1e-14);
    EXPECT_NEAR(std::abs(expect - cd(2, 2) / std::sqrt(2.0)), 0, 1e-14);
}

TEST(ContractOracle, PlainEdgeFusesPhases) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z, Phase::real(0.3));
    d.add_vertex(VertexKind::Z, Phase::real(0.9));
    d.add_edge(0, 1, EdgeType::Plain);
    EXPECT_NEAR(std::abs(contract_oracle(d) - (1.0 + std::polar(1.0, 1.2))), 0, 1e-14);
}

TEST(ContractOracle, IncludesScalar) {
    ZxDiagram d;
    d.add_vertex(VertexKind::Z);
    d.scalar() = Scalar(cd(0, 1), -3);
    EXPECT_NEAR(std::abs(contract_oracle(d) - cd(0, 2) / std::pow(2.0, 1.5)), 0, 1e-14);
}

TEST(ContractOracle, RejectsLargeAndOpenDiagrams) {
    ZxDiagram d;
    for (int i = 0; i < 5; ++i) d.add_vertex(VertexKind::Z);
    EXPECT_THROW(contract_oracle(d, 4), SizeExceeded);
    VertexId b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(0, b, EdgeType::Plain);
    d.set_inputs({b});
    EXPECT_THROW(contract_oracle(d), OpenDiagram);
}

}  // namespace
}  // namespace zxcut
