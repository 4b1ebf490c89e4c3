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

#include "zxcut/oracle.hpp"

#include <Eigen/Dense>
#include <numbers>
#include <string>
#include <vector>

#include "zxcut/error.hpp"

namespace zxcut {

namespace {

using Mat2 = Eigen::Matrix2cd;

// Column b holds the vector a leg of this spider carries when the spider's bit is b.
Mat2 leg_vectors(VertexKind kind) {
    Mat2 m;
    if (kind == VertexKind::Z) {
        m << 1, 0, 0, 1;
    } else {
        const double s = 1.0 / std::numbers::sqrt2;
        m << s, s, s, -s;
    }
    return m;
}

}  // namespace

std::complex<double> contract_oracle(const ZxDiagram& d, std::size_t max_vertices) {
    d.check_invariants();
    if (!d.is_closed()) throw OpenDiagram("contract_oracle requires a closed diagram");
    std::vector<VertexId> ids = d.spiders();
    if (ids.size() > max_vertices) {
        throw SizeExceeded("contract_oracle: " + std::to_string(ids.size()) +
                           " spiders exceed the bound of " + std::to_string(max_vertices));
    }
    const std::size_t n = ids.size();
    std::vector<int> index(d.id_bound(), -1);
    for (std::size_t i = 0; i < n; ++i) index[ids[i]] = static_cast<int>(i);

    Mat2 hadamard;
    {
        const double s = 1.0 / std::numbers::sqrt2;
        hadamard << s, s, s, -s;
    }

    struct EdgeFactor {
        int a, b;
        Mat2 table;  // table(bit_a, bit_b)
    };
    std::vector<EdgeFactor> edges;
    for (VertexId u : ids) {
        for (const auto& [v, t] : d.neighbors(u)) {
            if (v < u) continue;
            Mat2 lu = leg_vectors(d.kind(u));
            Mat2 lv = leg_vectors(d.kind(v));
            Mat2 pairing = t == EdgeType::Hadamard ? hadamard : Mat2::Identity();
            edges.push_back({index[u], index[v], lu.transpose() * pairing * lv});
        }
    }
    std::vector<std::complex<double>> weight(n);
    for (std::size_t i = 0; i < n; ++i) weight[i] = d.phase(ids[i]).exp_i();

    std::complex<double> total = 0.0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        std::complex<double> term = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((bits >> i) & 1) term *= weight[i];
        }
        for (const auto& e : edges) {
            term *= e.table((bits >> e.a) & 1, (bits >> e.b) & 1);
            if (term == std::complex<double>(0.0, 0.0)) break;
        }
        total += term;
    }
    return d.scalar().to_complex() * total;
}

}  // namespace zxcut
