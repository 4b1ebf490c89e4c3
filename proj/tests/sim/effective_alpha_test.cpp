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


#include <gtest/gtest.h>

#include <cmath>

#include "zxcut/effective_alpha.hpp"
#include "zxcut/error.hpp"

namespace zxcut {
namespace {

TEST(EffectiveAlpha, EqualChildrenClosedForm) {
    EXPECT_DOUBLE_EQ(effective_alpha(1, 4, 4, 8), 0.5);
    for (int n = 1; n <= 30; ++n) {
        for (int a = 0; 2 * a <= n && a < n; ++a) {
            for (double w : {0.0, 1.0, 2.5, 4.0}) {
                EXPECT_NEAR(effective_alpha(w, a, a, n), (w + 1) / (n - a), 1e-10);
            }
        }
    }
}

TEST(EffectiveAlpha, CuttingEverythingCostsOne) {
    // No children at all (a = b = 0): T(n) = 2^n (1 + 1).
    for (int n = 1; n <= 40; ++n) EXPECT_NEAR(effective_alpha(n, 0, 0, n), (n + 1.0) / n, 1e-12);
}

TEST(EffectiveAlpha, SolvesTheFixedPoint) {
    for (int n = 2; n <= 40; n += 3) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; a + b <= n && b < n; b += 2) {
                for (double w : {0.0, 1.0, 3.0}) {
                    const AlphaSolution s = solve_effective_alpha(w, a, b, n);
                    const double m = n - std::max(a, b);
                    const double rhs = (w + std::log2(1 + std::exp2(-s.alpha * std::abs(a - b)))) / m;
                    EXPECT_NEAR(s.alpha, rhs, 1e-10);
                    EXPECT_LE(s.iterations, 200);
                    // Consistent with T(n) = 2^w (T(a) + T(b)) at T(k) = 2^{αk}.
                    const double lhs = s.alpha * n;
                    const double rec = w + std::log2(std::exp2(s.alpha * a) + std::exp2(s.alpha * b));
                    EXPECT_NEAR(lhs, rec, 1e-8 * std::max(1.0, lhs));
                }
            }
        }
    }
}

TEST(EffectiveAlpha, RejectsBadArguments) {
    EXPECT_THROW(effective_alpha(1, 5, 4, 8), PreconditionViolation);
    EXPECT_THROW(effective_alpha(1, 8, 0, 8), PreconditionViolation);
    EXPECT_THROW(effective_alpha(-1, 1, 1, 8), PreconditionViolation);
}

}  // namespace
}  // namespace zxcut
