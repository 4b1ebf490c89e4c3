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

#include <random>

#include "../support/random_diagrams.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/serialize.hpp"

namespace zxcut {
namespace {

TEST(Serialize, RoundTripIsLossless) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        ZxDiagram d = testing::random_general(rng, 9, 0.4, testing::PhaseMix::Mixed);
        d.scalar() = Scalar({0.3, -1.7}, 5);
        ZxDiagram r = diagram_from_string(diagram_to_string(d));
        EXPECT_EQ(structural_fingerprint(r), structural_fingerprint(d));
        EXPECT_EQ(r.scalar(), d.scalar());
    }
}

TEST(Serialize, OpenDiagramKeepsBoundaries) {
    ZxDiagram d;
    VertexId in = d.add_vertex(VertexKind::Boundary);
    VertexId z = d.add_vertex(VertexKind::Z, Phase::rational(1, 4));
    VertexId out = d.add_vertex(VertexKind::Boundary);
    d.add_edge(in, z, EdgeType::Plain);
    d.add_edge(z, out, EdgeType::Hadamard);
    d.set_inputs({in});
    d.set_outputs({out});
    ZxDiagram r = diagram_from_json(diagram_to_json(d));
    EXPECT_EQ(r.inputs(), d.inputs());
    EXPECT_EQ(r.outputs(), d.outputs());
    EXPECT_EQ(r.edge_type(z, out), EdgeType::Hadamard);
}

TEST(Serialize, RejectsBadDocuments) {
    EXPECT_THROW(diagram_from_string("{"), ParseError);
    EXPECT_THROW(diagram_from_string(R"({"vertices": [{"id": 0, "kind": "Q"}], "edges": []})"), ParseError);
    EXPECT_THROW(diagram_from_string(R"({"vertices": [{"id": 0, "kind": "Z"}], "edges": [[0, 0, "H"]]})"),
                 MalformedDiagram);
}

}  // namespace
}  // namespace zxcut
