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

#ifndef ZXCUT_PHASE_HPP
#define ZXCUT_PHASE_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace zxcut {

/// An angle modulo 2π.
///
/// Two representations are kept apart on purpose: an exact rational multiple of π
/// (numerator/denominator, reduced, in [0, 2)) and a generic real in radians,
/// normalized to [0, 2π). Clifford and Pauli detection only ever looks at the exact
/// branch, so a generic real is never classified as Clifford even if it happens to
/// be numerically close to a multiple of π/2.
class Phase {
   public:
    /// Zero phase (exact).
    constexpr Phase() = default;

    /// num/den · π, exact.
    static Phase rational(std::int64_t num, std::int64_t den = 1);
    /// A generic angle in radians.
    static Phase real(double radians);
    static Phase pi() { return rational(1, 1); }
    static Phase zero() { return Phase(); }

    /// Parses a radian value, snapping to an exact multiple of π/4 when within `tol`.
    static Phase from_radians_snapped(double radians, double tol = 1e-12);

    bool is_exact() const noexcept { return exact_; }
    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    double radians() const noexcept;
    std::complex<double> exp_i() const;

    bool is_zero() const noexcept { return exact_ && num_ == 0; }
    /// Exact multiple of π.
    bool is_pauli() const noexcept { return exact_ && den_ == 1; }
    /// Exact multiple of π/2.
    bool is_clifford() const noexcept { return exact_ && (den_ == 1 || den_ == 2); }
    /// ±π/2.
    bool is_proper_clifford() const noexcept { return exact_ && den_ == 2; }

    Phase operator+(const Phase& other) const;
    Phase operator-(const Phase& other) const;
    Phase operator-() const;
    Phase& operator+=(const Phase& other) { return *this = *this + other; }
    Phase& operator-=(const Phase& other) { return *this = *this - other; }

    /// Structural equality: exact phases compare exactly, reals compare bitwise.
    bool operator==(const Phase& other) const noexcept;

    std::string to_string() const;

   private:
    bool exact_ = true;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double real_ = 0.0;
};

std::ostream& operator<<(std::ostream& out, const Phase& p);

}  // namespace zxcut

#endif  // ZXCUT_PHASE_HPP
