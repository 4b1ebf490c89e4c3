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


// Effective exponent of a single cut in a recursive decomposition.

#ifndef ZXCUT_EFFECTIVE_ALPHA_HPP
#define ZXCUT_EFFECTIVE_ALPHA_HPP

namespace zxcut {

struct AlphaSolution {
    double alpha = 0;
    int iterations = 0;
};

/// Solves α = (w + log2(1 + 2^{-α|a-b|})) / (n - max(a, b)), the exponent at which a cut
/// of cost 2^w into children with a and b non-Clifford spiders matches T(n) = 2^{αn}
/// under T(n) = 2^w (T(a) + T(b)).
///
/// Fixed-point iteration inside a shrinking bracket, falling back to bisection when a
/// step leaves the bracket or stalls. Stops at |g(α) - α| <= 1e-10.
/// Throws PreconditionViolation unless a + b <= n, n > max(a, b), w >= 0, and
/// NonConvergence after 200 iterations.
AlphaSolution solve_effective_alpha(double w, int a, int b, int n);
double effective_alpha(double w, int a, int b, int n);

}  // namespace zxcut

#endif  // ZXCUT_EFFECTIVE_ALPHA_HPP
