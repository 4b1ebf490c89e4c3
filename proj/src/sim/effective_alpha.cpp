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


#include "zxcut/effective_alpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "zxcut/error.hpp"

namespace zxcut {

namespace {

constexpr double kTolerance = 1e-10;
constexpr int kMaxIterations = 200;

}  // namespace

AlphaSolution solve_effective_alpha(double w, int a, int b, int n) {
    if (a < 0 || b < 0 || a + b > n || n <= std::max(a, b) || !(w >= 0)) {
        throw PreconditionViolation("effective_alpha needs a + b <= n, n > max(a, b), w >= 0 (w=" +
                                    std::to_string(w) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                    " n=" + std::to_string(n) + ")");
    }
    const double span = n - std::max(a, b);
    const double gap = std::abs(a - b);
    auto g = [&](double x) { return (w + std::log2(1.0 + std::exp2(-x * gap))) / span; };

    // g is non-increasing, so the root of g(x) - x lies in [w/span, (w+1)/span].
    double lo = w / span;
    double hi = (w + 1.0) / span;
    double x = hi;
    double last_residual = INFINITY;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const double gx = g(x);
        const double residual = std::abs(gx - x);
        if (residual <= kTolerance) return {x, it};
        if (gx > x) {
            lo = x;
        } else {
            hi = x;
        }
        const bool contracting = residual < 0.5 * last_residual;
        last_residual = residual;
        x = (gx > lo && gx < hi && contracting) ? gx : 0.5 * (lo + hi);
    }
    throw NonConvergence("effective_alpha did not converge in " + std::to_string(kMaxIterations) + " iterations");
}

double effective_alpha(double w, int a, int b, int n) { return solve_effective_alpha(w, a, b, n).alpha; }

}  // namespace zxcut
