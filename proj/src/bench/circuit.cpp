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


#include "zxcut/circuit.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "zxcut/error.hpp"

namespace zxcut {

namespace {

std::string format_angle(const Phase& p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p.radians());
    return buf;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
}

Phase parse_angle(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used == tok.size()) return Phase::from_radians_snapped(v);
    } catch (const std::exception&) {
    }
    throw ParseError("line " + std::to_string(line) + ": expected an angle, got '" + tok + "'");
}

}  // namespace

void Circuit::validate() const {
    if (qubits < 0) throw MalformedDiagram("negative qubit count");
    for (const Gate& g : gates) {
        std::set<int> seen;
        for (int q : g.qubits) {
            if (q < 0 || q >= qubits) throw MalformedDiagram("qubit " + std::to_string(q) + " out of range");
            if (!seen.insert(q).second) throw MalformedDiagram("gate repeats qubit " + std::to_string(q));
        }
        const std::size_t arity = g.kind == GateKind::CNOT ? 2 : 1;
        if (g.kind == GateKind::Gadget) {
            if (g.qubits.empty() || g.pauli.size() != g.qubits.size()) {
                throw MalformedDiagram("gadget needs one Pauli letter per qubit and support >= 1");
            }
            if (g.pauli.find_first_not_of("XYZ") != std::string::npos) {
                throw MalformedDiagram("gadget Pauli string '" + g.pauli + "'");
            }
        } else if (g.qubits.size() != arity) {
            throw MalformedDiagram("gate with the wrong number of qubits");
        }
    }
}

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    bool header = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto need = [&](std::size_t n) {
            if (tok.size() != n) throw ParseError("line " + std::to_string(line) + ": wrong number of fields");
        };
        const std::string& op = tok[0];
        if (op == "QUBITS") {
            need(2);
            if (header) throw ParseError("line " + std::to_string(line) + ": repeated QUBITS header");
            c.qubits = parse_int(tok[1], line);
            header = true;
            continue;
        }
        if (!header) throw ParseError("line " + std::to_string(line) + ": gate before the QUBITS header");
        Gate g;
        if (op == "H" || op == "S") {
            need(2);
            g.kind = op == "H" ? GateKind::H : GateKind::S;
            g.qubits = {parse_int(tok[1], line)};
        } else if (op == "CNOT") {
            need(3);
            g.kind = GateKind::CNOT;
            g.qubits = {parse_int(tok[1], line), parse_int(tok[2], line)};
        } else if (op == "RZ") {
            need(3);
            g.kind = GateKind::RZ;
            g.qubits = {parse_int(tok[1], line)};
            g.angle = parse_angle(tok[2], line);
        } else if (op == "GADGET") {
            if (tok.size() < 4) throw ParseError("line " + std::to_string(line) + ": GADGET needs qubits");
            g.kind = GateKind::Gadget;
            g.pauli = tok[1];
            g.angle = parse_angle(tok[2], line);
            for (std::size_t i = 3; i < tok.size(); ++i) g.qubits.push_back(parse_int(tok[i], line));
        } else {
            throw ParseError("line " + std::to_string(line) + ": unknown gate '" + op + "'");
        }
        c.gates.push_back(std::move(g));
    }
    if (!header) throw ParseError("missing QUBITS header");
    try {
        c.validate();
    } catch (const MalformedDiagram& e) {
        throw ParseError(e.what());
    }
    return c;
}

Circuit read_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

std::string to_string(const Circuit& c) {
    std::ostringstream out;
    out << "QUBITS " << c.qubits << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                out << "H " << g.qubits[0];
                break;
            case GateKind::S:
                out << "S " << g.qubits[0];
                break;
            case GateKind::CNOT:
                out << "CNOT " << g.qubits[0] << " " << g.qubits[1];
                break;
            case GateKind::RZ:
                out << "RZ " << g.qubits[0] << " " << format_angle(g.angle);
                break;
            case GateKind::Gadget:
                out << "GADGET " << g.pauli << " " << format_angle(g.angle);
                for (int q : g.qubits) out << " " << q;
                break;
        }
        out << "\n";
    }
    return out.str();
}

Circuit expand_gadgets(const Circuit& c) {
    Circuit out;
    out.qubits = c.qubits;
    auto h = [&](int q) { out.gates.push_back(Gate{GateKind::H, {q}, Phase(), ""}); };
    auto rz = [&](int q, Phase p) { out.gates.push_back(Gate{GateKind::RZ, {q}, p, ""}); };
    auto cnot = [&](int a, int b) { out.gates.push_back(Gate{GateKind::CNOT, {a, b}, Phase(), ""}); };
    for (const Gate& g : c.gates) {
        if (g.kind != GateKind::Gadget) {
            out.gates.push_back(g);
            continue;
        }
        const std::size_t k = g.qubits.size();
        // Rotate each factor to Z: H for X, H S^dagger for Y.
        for (std::size_t i = 0; i < k; ++i) {
            if (g.pauli[i] == 'Y') rz(g.qubits[i], Phase::rational(-1, 2));
            if (g.pauli[i] != 'Z') h(g.qubits[i]);
        }
        for (std::size_t i = 0; i + 1 < k; ++i) cnot(g.qubits[i], g.qubits[i + 1]);
        rz(g.qubits[k - 1], g.angle);
        for (std::size_t i = k - 1; i-- > 0;) cnot(g.qubits[i], g.qubits[i + 1]);
        for (std::size_t i = 0; i < k; ++i) {
            if (g.pauli[i] != 'Z') h(g.qubits[i]);
            if (g.pauli[i] == 'Y') rz(g.qubits[i], Phase::rational(1, 2));
        }
    }
    return out;
}

ZxDiagram to_diagram(const Circuit& circuit) {
    circuit.validate();
    const Circuit c = expand_gadgets(circuit);
    ZxDiagram d;
    const auto n = static_cast<std::size_t>(c.qubits);
    std::vector<VertexId> last(n);
    std::vector<EdgeType> pending(n, EdgeType::Plain);
    int half_power = 0;
    for (std::size_t q = 0; q < n; ++q) {
        last[q] = d.add_vertex(VertexKind::X);
        --half_power;
    }
    auto extend = [&](int q, VertexKind kind, Phase p) {
        const auto i = static_cast<std::size_t>(q);
        const VertexId v = d.add_vertex(kind, p);
        d.add_edge(last[i], v, pending[i]);
        last[i] = v;
        pending[i] = EdgeType::Plain;
        return v;
    };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: {
                auto& t = pending[static_cast<std::size_t>(g.qubits[0])];
                t = toggled(t);
                break;
            }
            case GateKind::S:
                extend(g.qubits[0], VertexKind::Z, Phase::rational(1, 2));
                break;
            case GateKind::RZ:
                extend(g.qubits[0], VertexKind::Z, g.angle);
                break;
            case GateKind::CNOT: {
                const VertexId a = extend(g.qubits[0], VertexKind::Z, Phase());
                const VertexId b = extend(g.qubits[1], VertexKind::X, Phase());
                d.add_edge(a, b, EdgeType::Plain);
                // The bare Z-X pair is CNOT / √2.
                ++half_power;
                break;
            }
            case GateKind::Gadget:
                break;
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        const VertexId v = d.add_vertex(VertexKind::X);
        d.add_edge(last[q], v, pending[q]);
        --half_power;
    }
    d.scalar() = Scalar::sqrt2_pow(half_power);
    return d;
}

}  // namespace zxcut
