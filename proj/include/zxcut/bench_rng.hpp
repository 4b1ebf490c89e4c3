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


// Portable random draws for benchmark generators.

#ifndef ZXCUT_BENCH_RNG_HPP
#define ZXCUT_BENCH_RNG_HPP

#include <cstdint>
#include <random>

namespace zxcut {

/// Fixed streams, one per generator, so adding a generator never shifts another's draws.
enum class Stream : std::uint64_t { ErdosRenyi = 1, CliffordRz = 2, PauliGadgets = 3 };

/// std::mt19937_64 with the draw-to-value maps written out here, since the standard
/// distributions are implementation-defined. Seeded with derive_seed(seed, stream).
class BenchRng {
   public:
    BenchRng(std::uint64_t seed, Stream stream);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [0, n) by rejection; n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform angle in [0, 2π).
    double angle();

   private:
    std::mt19937_64 engine_;
};

}  // namespace zxcut

#endif  // ZXCUT_BENCH_RNG_HPP
