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


// Circuits over H, S, CNOT, RZ and Pauli gadgets, their text format, and their
// translation into closed diagrams.

#ifndef ZXCUT_CIRCUIT_HPP
#define ZXCUT_CIRCUIT_HPP

#include <string>
#include <vector>

#include "zxcut/diagram.hpp"
#include "zxcut/phase.hpp"

namespace zxcut {

enum class GateKind { H, S, CNOT, RZ, Gadget };

/// RZ(θ) is diag(1, e^{iθ}) and S = RZ(π/2). A gadget with Pauli string P multiplies the
/// -1 eigenspace of P by e^{iθ}; on a single Z it equals RZ(θ).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    Phase angle;
    /// Letters from {X, Y, Z}, one per qubit in `qubits`.
    std::string pauli;

    bool operator==(const Gate&) const = default;
};

struct Circuit {
    int qubits = 0;
    std::vector<Gate> gates;

    /// Throws MalformedDiagram on out-of-range or repeated qubits, or bad Pauli strings.
    void validate() const;
    bool operator==(const Circuit&) const = default;
};

/// Parses the line format: a `QUBITS n` header, then one gate per line:
/// `H q`, `S q`, `CNOT c t`, `RZ q θ`, `GADGET P θ q...`. `#` starts a comment.
/// Angles are radians and snap to exact multiples of π/4. Throws ParseError.
Circuit parse_circuit(const std::string& text);
Circuit read_circuit(const std::string& path);
/// Inverse of parse_circuit; angles are printed with 17 significant digits.
std::string to_string(const Circuit& c);

/// The circuit as primitive gates: each gadget becomes basis changes, a CNOT ladder onto
/// its last qubit, RZ(θ) there, and the mirror image.
Circuit expand_gadgets(const Circuit& c);

/// Closed diagram whose value is <0...0| C |0...0>. Inputs and outputs are X spiders
/// (each √2 |0>), and a CNOT is a Z-X pair (CNOT / √2); both are compensated in the
/// scalar. H toggles the type of the wire edge.
ZxDiagram to_diagram(const Circuit& c);

}  // namespace zxcut

#endif  // ZXCUT_CIRCUIT_HPP
