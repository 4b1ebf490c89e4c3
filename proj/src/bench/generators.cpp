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


#include "zxcut/generators.hpp"

#include <algorithm>
#include <numeric>

#include "zxcut/bench_rng.hpp"
#include "zxcut/error.hpp"

namespace zxcut {

ZxDiagram gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw PreconditionViolation("gen_erdos_renyi needs n >= 1, p in [0, 1]");
    BenchRng rng(seed, Stream::ErdosRenyi);
    ZxDiagram d;
    for (int i = 0; i < n; ++i) d.add_vertex(VertexKind::Z, Phase::real(rng.angle()));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) d.add_edge(i, j, EdgeType::Hadamard);
        }
    }
    return d;
}

Circuit gen_clifford_rz(int qubits, int gates, double p_phase, std::uint64_t seed) {
    if (qubits < 1 || gates < 0) throw PreconditionViolation("gen_clifford_rz needs qubits >= 1, gates >= 0");
    BenchRng rng(seed, Stream::CliffordRz);
    Circuit c;
    c.qubits = qubits;
    const int kinds = qubits >= 2 ? 3 : 2;
    for (int i = 0; i < gates; ++i) {
        Gate g;
        if (rng.bernoulli(p_phase)) {
            g.kind = GateKind::RZ;
            g.qubits = {rng.between(0, qubits - 1)};
            g.angle = Phase::real(rng.angle());
        } else {
            switch (rng.between(0, kinds - 1)) {
                case 0:
                    g.kind = GateKind::H;
                    g.qubits = {rng.between(0, qubits - 1)};
                    break;
                case 1:
                    g.kind = GateKind::S;
                    g.qubits = {rng.between(0, qubits - 1)};
                    break;
                default: {
                    g.kind = GateKind::CNOT;
                    const int a = rng.between(0, qubits - 1);
                    int b = rng.between(0, qubits - 2);
                    if (b >= a) ++b;
                    g.qubits = {a, b};
                }
            }
        }
        c.gates.push_back(std::move(g));
    }
    return c;
}

Circuit gen_pauli_gadgets(int qubits, int count, std::uint64_t seed, int max_support) {
    if (qubits < 2 || count < 0) throw PreconditionViolation("gen_pauli_gadgets needs qubits >= 2, count >= 0");
    if (max_support == 0) max_support = qubits / 2;
    if (max_support < 1 || max_support > qubits) {
        throw PreconditionViolation("gen_pauli_gadgets needs 1 <= max_support <= qubits");
    }
    BenchRng rng(seed, Stream::PauliGadgets);
    Circuit c;
    c.qubits = qubits;
    for (int i = 0; i < count; ++i) {
        const int support = rng.between(1, max_support);
        // Partial Fisher-Yates: the first `support` entries are a uniform subset.
        std::vector<int> pool(static_cast<std::size_t>(qubits));
        std::iota(pool.begin(), pool.end(), 0);
        for (int k = 0; k < support; ++k) {
            const int j = rng.between(k, qubits - 1);
            std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
        }
        Gate g;
        g.kind = GateKind::Gadget;
        g.qubits.assign(pool.begin(), pool.begin() + support);
        std::sort(g.qubits.begin(), g.qubits.end());
        for (int k = 0; k < support; ++k) g.pauli.push_back("XYZ"[rng.below(3)]);
        g.angle = Phase::real(rng.angle());
        c.gates.push_back(std::move(g));
    }
    return c;
}

}  // namespace zxcut
