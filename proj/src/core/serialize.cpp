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

#include "zxcut/serialize.hpp"

#include "zxcut/error.hpp"

namespace zxcut {

using nlohmann::json;

namespace {

const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Z:
            return "Z";
        case VertexKind::X:
            return "X";
        case VertexKind::Boundary:
            return "B";
    }
    return "?";
}

VertexKind parse_kind(const std::string& s) {
    if (s == "Z") return VertexKind::Z;
    if (s == "X") return VertexKind::X;
    if (s == "B") return VertexKind::Boundary;
    throw ParseError("unknown vertex kind '" + s + "'");
}

}  // namespace

json diagram_to_json(const ZxDiagram& d) {
    json vertices = json::array();
    json edges = json::array();
    for (VertexId v : d.vertices()) {
        json jv = {{"id", v}, {"kind", kind_name(d.kind(v))}};
        const Phase& p = d.phase(v);
        if (p.is_exact()) {
            jv["phase_num"] = p.numerator();
            jv["phase_den"] = p.denominator();
        } else {
            jv["phase_real"] = p.radians();
        }
        vertices.push_back(std::move(jv));
        for (const auto& [w, t] : d.neighbors(v)) {
            if (w > v) edges.push_back(json::array({v, w, t == EdgeType::Hadamard ? "H" : "P"}));
        }
    }
    const Scalar& s = d.scalar();
    return json{{"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"scalar",
                 {{"re", s.coefficient().real()},
                  {"im", s.coefficient().imag()},
                  {"half_power", s.half_power()}}},
                {"inputs", d.inputs()},
                {"outputs", d.outputs()}};
}

ZxDiagram diagram_from_json(const json& j) {
    ZxDiagram d;
    try {
        for (const auto& jv : j.at("vertices")) {
            Phase p;
            if (jv.contains("phase_real")) {
                p = Phase::real(jv.at("phase_real").get<double>());
            } else if (jv.contains("phase_num")) {
                p = Phase::rational(jv.at("phase_num").get<std::int64_t>(),
                                    jv.value("phase_den", std::int64_t{1}));
            }
            d.add_vertex_with_id(jv.at("id").get<VertexId>(), parse_kind(jv.at("kind").get<std::string>()), p);
        }
        for (const auto& je : j.at("edges")) {
            if (!je.is_array() || je.size() != 3) throw ParseError("edge must be [u, v, type]");
            std::string t = je[2].get<std::string>();
            if (t != "H" && t != "P") throw ParseError("unknown edge type '" + t + "'");
            d.add_edge(je[0].get<VertexId>(), je[1].get<VertexId>(),
                       t == "H" ? EdgeType::Hadamard : EdgeType::Plain);
        }
        if (j.contains("scalar")) {
            const auto& js = j.at("scalar");
            d.scalar() = Scalar({js.value("re", 1.0), js.value("im", 0.0)}, js.value("half_power", 0));
        }
        if (j.contains("inputs")) d.set_inputs(j.at("inputs").get<std::vector<VertexId>>());
        if (j.contains("outputs")) d.set_outputs(j.at("outputs").get<std::vector<VertexId>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("diagram json: ") + e.what());
    }
    d.check_invariants();
    return d;
}

std::string diagram_to_string(const ZxDiagram& d) { return diagram_to_json(d).dump(); }

ZxDiagram diagram_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("diagram json: ") + e.what());
    }
    return diagram_from_json(j);
}

}  // namespace zxcut
