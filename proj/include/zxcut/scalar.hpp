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

#ifndef ZXCUT_SCALAR_HPP
#define ZXCUT_SCALAR_HPP

#include <complex>
#include <iosfwd>

#include "zxcut/phase.hpp"

namespace zxcut {

/// A complex number stored as coefficient · 2^(half_power/2).
///
/// The larger of |Re c|, |Im c| is kept in [1, 2) (or c is exactly zero) by moving
/// whole factors of two into the exponent, so normalization never touches the
/// coefficient's mantissa bits.
class Scalar {
   public:
    Scalar() : coefficient_(1.0), half_power_(0) {}
    Scalar(std::complex<double> coefficient, int half_power = 0);

    static Scalar one() { return Scalar(); }
    static Scalar zero() { return Scalar(0.0, 0); }
    /// √2^k.
    static Scalar sqrt2_pow(int k) { return Scalar(1.0, k); }
    static Scalar phase(const Phase& p) { return Scalar(p.exp_i(), 0); }

    std::complex<double> coefficient() const noexcept { return coefficient_; }
    int half_power() const noexcept { return half_power_; }
    bool is_zero() const noexcept { return coefficient_ == std::complex<double>(0.0, 0.0); }

    std::complex<double> to_complex() const;

    Scalar& operator*=(const Scalar& other);
    Scalar& multiply_phase(const Phase& p) { return *this *= phase(p); }
    Scalar& add_half_power(int k);

    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    /// Sum, computed at the larger of the two exponents.
    friend Scalar operator+(const Scalar& a, const Scalar& b);

    /// Exact structural equality (coefficient bits and exponent).
    bool operator==(const Scalar& other) const noexcept {
        return coefficient_ == other.coefficient_ && half_power_ == other.half_power_;
    }

   private:
    void normalize();

    std::complex<double> coefficient_;
    int half_power_;
};

std::ostream& operator<<(std::ostream& out, const Scalar& s);

}  // namespace zxcut

#endif  // ZXCUT_SCALAR_HPP
