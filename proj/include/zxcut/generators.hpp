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


// Benchmark instance generators. Each is a pure function of its arguments.

#ifndef ZXCUT_GENERATORS_HPP
#define ZXCUT_GENERATORS_HPP

#include <cstdint>

#include "zxcut/circuit.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

/// n Z spiders with generic phases uniform in [0, 2π), each pair joined by an H-edge
/// with probability p (pairs visited in lexicographic order).
ZxDiagram gen_erdos_renyi(int n, double p, std::uint64_t seed);

/// `gates` gates: RZ with probability p_phase and uniform angle, otherwise H, S or CNOT
/// with equal probability on uniformly chosen qubits. Needs qubits >= 2 for CNOT;
/// with one qubit CNOT is never drawn.
Circuit gen_clifford_rz(int qubits, int gates, double p_phase, std::uint64_t seed);

/// `count` Pauli gadgets: support size uniform in 1..max_support, then a uniform qubit
/// subset (sorted), uniform letters from {X, Y, Z} and a uniform angle. max_support = 0
/// means floor(qubits/2).
Circuit gen_pauli_gadgets(int qubits, int count, std::uint64_t seed, int max_support = 0);

}  // namespace zxcut

#endif  // ZXCUT_GENERATORS_HPP
