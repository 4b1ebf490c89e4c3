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


#include "zxcut/bench_rng.hpp"

#include <numbers>

#include "zxcut/splitmix.hpp"

namespace zxcut {

BenchRng::BenchRng(std::uint64_t seed, Stream stream)
    : engine_(derive_seed(seed, static_cast<std::uint64_t>(stream))) {}

double BenchRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t BenchRng::below(std::uint64_t n) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
}

double BenchRng::angle() { return 2.0 * std::numbers::pi * uniform(); }

}  // namespace zxcut
