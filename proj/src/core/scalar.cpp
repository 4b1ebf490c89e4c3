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

#include "zxcut/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace zxcut {

namespace {

std::complex<double> ldexp_c(std::complex<double> c, int e) {
    return {std::ldexp(c.real(), e), std::ldexp(c.imag(), e)};
}

// 2^(k/2) applied to c.
std::complex<double> scale_half(std::complex<double> c, int k) {
    int whole = k >= 0 ? k / 2 : -((-k + 1) / 2);
    int odd = k - 2 * whole;  // 0 or 1
    c = ldexp_c(c, whole);
    if (odd) c *= std::numbers::sqrt2;
    return c;
}

}  // namespace

Scalar::Scalar(std::complex<double> coefficient, int half_power)
    : coefficient_(coefficient), half_power_(half_power) {
    normalize();
}

void Scalar::normalize() {
    if (is_zero() || !std::isfinite(coefficient_.real()) || !std::isfinite(coefficient_.imag())) {
        if (is_zero()) half_power_ = 0;
        return;
    }
    double m = std::max(std::abs(coefficient_.real()), std::abs(coefficient_.imag()));
    int e = 0;
    std::frexp(m, &e);  // m = f · 2^e with f in [0.5, 1)
    // Bring the larger component into [1, 2); power-of-two scaling is exact.
    int shift = e - 1;
    coefficient_ = ldexp_c(coefficient_, -shift);
    half_power_ += 2 * shift;
}

std::complex<double> Scalar::to_complex() const {
    if (is_zero()) return 0.0;
    return scale_half(coefficient_, half_power_);
}

Scalar& Scalar::operator*=(const Scalar& other) {
    coefficient_ *= other.coefficient_;
    half_power_ += other.half_power_;
    normalize();
    return *this;
}

Scalar& Scalar::add_half_power(int k) {
    if (!is_zero()) half_power_ += k;
    return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Align on a common even exponent so the shift of the smaller term is a power of two
    // (plus at most one √2 factor).
    int top = std::max(a.half_power_, b.half_power_);
    std::complex<double> ca = scale_half(a.coefficient_, a.half_power_ - top);
    std::complex<double> cb = scale_half(b.coefficient_, b.half_power_ - top);
    return Scalar(ca + cb, top);
}

std::ostream& operator<<(std::ostream& out, const Scalar& s) {
    return out << s.coefficient() << "*sqrt2^" << s.half_power();
}

}  // namespace zxcut
