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

#ifndef ZXCUT_ORACLE_HPP
#define ZXCUT_ORACLE_HPP

#include <complex>
#include <cstddef>

#include "zxcut/diagram.hpp"

namespace zxcut {

/// Exact value of a closed diagram by brute-force contraction.
///
/// Every spider tensor factors through a single bit (Z: the computational basis index
/// shared by all legs; X: which of |+..+>, |-..-> is selected), so the network is
/// summed over one bit per spider with a 2x2 leg-pairing matrix per edge. This never
/// uses any rewrite rule and serves as the reference for all of them.
///
/// Throws OpenDiagram if `d` has boundaries, SizeExceeded above `max_vertices`, and
/// MalformedDiagram if `d` fails its invariants.
std::complex<double> contract_oracle(const ZxDiagram& d, std::size_t max_vertices = 16);

}  // namespace zxcut

#endif  // ZXCUT_ORACLE_HPP
