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

#ifndef ZXCUT_SERIALIZE_HPP
#define ZXCUT_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

// Document layout:
//   { "vertices": [{"id", "kind": "Z"|"X"|"B", "phase_num", "phase_den"} | {..., "phase_real"}],
//     "edges":    [[u, v, "H"|"P"], ...],
//     "scalar":   {"re", "im", "half_power"},
//     "inputs":   [...], "outputs": [...] }

nlohmann::json diagram_to_json(const ZxDiagram& d);
/// Throws ParseError on schema violations and MalformedDiagram on invariant violations.
ZxDiagram diagram_from_json(const nlohmann::json& j);

std::string diagram_to_string(const ZxDiagram& d);
ZxDiagram diagram_from_string(const std::string& text);

}  // namespace zxcut

#endif  // ZXCUT_SERIALIZE_HPP
