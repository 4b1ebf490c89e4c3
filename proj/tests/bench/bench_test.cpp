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
#include <numbers>
#include <sstream>

#include "../support/random_diagrams.hpp"
#include "../support/statevector.hpp"
#include "zxcut/bench_rng.hpp"
#include "zxcut/circuit.hpp"
#include "zxcut/error.hpp"
#include "zxcut/generators.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/runner.hpp"
#include "zxcut/serialize.hpp"

namespace zxcut {
namespace {

using testing::close;
using testing::statevector_amplitude;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

TEST(BenchRng, UniformRanges) {
    BenchRng rng(1, Stream::CliffordRz);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        const int b = rng.between(3, 5);
        ASSERT_GE(b, 3);
        ASSERT_LE(b, 5);
    }
    BenchRng a(9, Stream::ErdosRenyi);
    BenchRng b(9, Stream::PauliGadgets);
    EXPECT_NE(a.next(), b.next());
}

TEST(Circuit, EmptyAndSingleHadamard) {
    Circuit c;
    c.qubits = 3;
    EXPECT_TRUE(close(contract_oracle(to_diagram(c)), 1.0, 1e-12));
    c.gates.push_back(Gate{GateKind::H, {1}, Phase(), ""});
    EXPECT_TRUE(close(contract_oracle(to_diagram(c)), 1.0 / std::sqrt(2.0), 1e-12));
}

TEST(Circuit, MatchesStatevector) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Circuit c = gen_clifford_rz(6, 40, 0.3, seed);
        const ZxDiagram d = full_reduce(to_graph_like(to_diagram(c)));
        const auto want = statevector_amplitude(c);
        ASSERT_TRUE(close(contract_oracle(d, 22), want, 1e-9)) << seed;
    }
}

TEST(Circuit, GadgetsMatchStatevector) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Circuit c = gen_pauli_gadgets(4, 3, seed);
        // A Hadamard layer makes <0|C|0> depend on every gadget.
        Circuit wrapped;
        wrapped.qubits = c.qubits;
        for (int q = 0; q < c.qubits; ++q) wrapped.gates.push_back(Gate{GateKind::H, {q}, Phase(), ""});
        for (const Gate& g : c.gates) wrapped.gates.push_back(g);
        for (int q = 0; q < c.qubits; ++q) wrapped.gates.push_back(Gate{GateKind::H, {q}, Phase(), ""});
        const auto want = statevector_amplitude(wrapped);
        EXPECT_TRUE(close(statevector_amplitude(expand_gadgets(wrapped)), want, 1e-12)) << seed;
        const ZxDiagram d = full_reduce(to_graph_like(to_diagram(wrapped)));
        ASSERT_TRUE(close(contract_oracle(d, 20), want, 1e-9)) << seed;
    }
}

TEST(Circuit, SingleZGadgetIsRz) {
    Circuit a;
    a.qubits = 1;
    a.gates = {Gate{GateKind::H, {0}, Phase(), ""}, Gate{GateKind::Gadget, {0}, Phase::real(0.7), "Z"},
               Gate{GateKind::H, {0}, Phase(), ""}};
    Circuit b = a;
    b.gates[1] = Gate{GateKind::RZ, {0}, Phase::real(0.7), ""};
    EXPECT_EQ(expand_gadgets(a), b);
    EXPECT_TRUE(close(contract_oracle(to_diagram(a)), statevector_amplitude(b), 1e-12));
}

TEST(Circuit, TextRoundTrip) {
    const Circuit c = gen_pauli_gadgets(6, 10, 3);
    const Circuit d = gen_clifford_rz(5, 50, 0.2, 4);
    EXPECT_EQ(parse_circuit(to_string(c)), c);
    EXPECT_EQ(parse_circuit(to_string(d)), d);
    const Circuit e = parse_circuit("# demo\nQUBITS 3\nH 0  # comment\nCNOT 0 2\nRZ 1 0.78539816339744828\nS 2\n");
    EXPECT_EQ(e.gates.size(), 4u);
    EXPECT_TRUE(e.gates[2].angle == Phase::rational(1, 4));
}

TEST(Circuit, ParseErrors) {
    EXPECT_THROW(parse_circuit("H 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 2\nCNOT 0 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 2\nH 5\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 2\nFOO 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 2\nGADGET XQ 0.1 0 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 2\nRZ 0 abc\n"), ParseError);
}

TEST(Generators, ErdosRenyiShapes) {
    const ZxDiagram empty = gen_erdos_renyi(7, 0.0, 1);
    EXPECT_EQ(empty.num_edges(), 0u);
    EXPECT_EQ(nc_count(empty), 7u);
    std::complex<double> prod = 1;
    for (VertexId v : empty.spiders()) prod *= 1.0 + empty.phase(v).exp_i();
    EXPECT_TRUE(close(contract_oracle(empty), prod, 1e-12));
    EXPECT_EQ(gen_erdos_renyi(7, 1.0, 1).num_edges(), 21u);
}

TEST(Generators, ErdosRenyiGolden) {
    EXPECT_EQ(diagram_to_string(gen_erdos_renyi(6, 0.5, 42)), diagram_to_string(gen_erdos_renyi(6, 0.5, 42)));
    EXPECT_EQ(fnv1a(diagram_to_string(gen_erdos_renyi(6, 0.5, 42))), 12670335945887482903ULL);
}

TEST(Generators, CliffordRzDistribution) {
    const Circuit c = gen_clifford_rz(8, 20000, 0.2, 5);
    int counts[4] = {0, 0, 0, 0};
    for (const Gate& g : c.gates) counts[static_cast<int>(g.kind)]++;
    const int rz = counts[static_cast<int>(GateKind::RZ)];
    EXPECT_NEAR(rz / 20000.0, 0.2, 0.01);
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::CNOT}) {
        EXPECT_NEAR(counts[static_cast<int>(k)] / 20000.0, 0.8 / 3, 0.015);
    }
    EXPECT_TRUE(gen_clifford_rz(4, 0, 0.2, 1).gates.empty());
}

TEST(Generators, PureCliffordNeedsNoBranching) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit c = gen_clifford_rz(6, 60, 0.0, seed);
        const ZxDiagram d = full_reduce(to_graph_like(to_diagram(c)));
        EXPECT_EQ(d.num_spiders(), 0u);
        EXPECT_TRUE(close(d.scalar().to_complex(), statevector_amplitude(c), 1e-9));
    }
}

TEST(Generators, CliffordRzNonCliffordCount) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit c = gen_clifford_rz(16, 100, 0.2, seed);
        std::size_t rz = 0;
        for (const Gate& g : c.gates) rz += g.kind == GateKind::RZ;
        EXPECT_LE(nc_count(full_reduce(to_graph_like(to_diagram(c)))), rz);
    }
}

TEST(Generators, PauliGadgetSupport) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit c = gen_pauli_gadgets(8, 8, seed);
        ASSERT_EQ(c.gates.size(), 8u);
        for (const Gate& g : c.gates) {
            EXPECT_GE(g.qubits.size(), 1u);
            EXPECT_LE(g.qubits.size(), 4u);
        }
        EXPECT_LE(nc_count(full_reduce(to_graph_like(to_diagram(c)))), 8u);
    }
    EXPECT_TRUE(gen_pauli_gadgets(4, 0, 1).gates.empty());
}

TEST(Generators, PauliGadgetSupportOverride) {
    std::size_t widest = 0;
    for (const Gate& g : gen_pauli_gadgets(8, 200, 5, 7).gates) widest = std::max(widest, g.qubits.size());
    EXPECT_EQ(widest, 7u);
    EXPECT_EQ(gen_pauli_gadgets(8, 20, 5, 4), gen_pauli_gadgets(8, 20, 5));
    EXPECT_THROW(gen_pauli_gadgets(8, 1, 5, 9), PreconditionViolation);
}

TEST(Runner, GridExpansion) {
    const auto er = expand_grid("er", "n=12,18;p=0.1,0.5,1;seed=0:2");
    EXPECT_EQ(er.size(), 18u);
    EXPECT_EQ(*er.back().n, 18);
    const auto pauli = expand_grid("pauli", "qubits=8;seed=3");
    ASSERT_EQ(pauli.size(), 1u);
    EXPECT_EQ(*pauli[0].n_gates, 16);
    EXPECT_THROW(expand_grid("er", "n=12"), ParseError);
    EXPECT_THROW(expand_grid("er", "n=12;p=0.1;bogus=1"), ParseError);
    EXPECT_THROW(expand_grid("ghz", "n=3"), ParseError);
}

TEST(Runner, CsvSchema) {
    EXPECT_EQ(csv_header(),
              "family,n_qubits,n_gates,n_vertices,nc,p,rank_width,mixed_rank_width,alpha,terms_log2,seed,wall_ms");
    BenchOptions opt;
    opt.trees = 50;
    opt.anneal_steps = 2000;
    for (const auto& [family, grid] : {std::pair{"er", "n=10;p=0.5;seed=1"}, std::pair{"cliffordrz", "qubits=6;gates=60;seed=2"},
                                       std::pair{"pauli", "qubits=4;seed=3"}}) {
        const auto rows = run_bench(family, grid, opt);
        ASSERT_EQ(rows.size(), 1u);
        const std::string line = csv_row(rows[0]);
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11) << line;
        EXPECT_EQ(line.substr(0, line.find(',')), family);
        EXPECT_GE(rows[0].alpha, 0.0);
        EXPECT_NEAR(rows[0].terms_log2, rows[0].alpha * static_cast<double>(rows[0].nc), 1e-9);
    }
}

TEST(Runner, ParallelRunsMatch) {
    BenchOptions opt;
    opt.trees = 30;
    opt.anneal_steps = 1000;
    const auto one = run_bench("er", "n=9;p=0.3,0.6;seed=0:1", opt);
    opt.jobs = 4;
    const auto four = run_bench("er", "n=9;p=0.3,0.6;seed=0:1", opt);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].alpha, four[i].alpha);
        EXPECT_EQ(one[i].mixed_rank_width, four[i].mixed_rank_width);
    }
}

}  // namespace
}  // namespace zxcut
