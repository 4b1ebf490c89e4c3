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

#include "zxcut/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zxcut {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

}  // namespace

Phase Phase::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Phase::rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    std::int64_t period = 2 * den;
    num %= period;
    if (num < 0) num += period;
    Phase p;
    p.exact_ = true;
    p.num_ = num;
    p.den_ = den;
    return p;
}

Phase Phase::real(double radians) {
    Phase p;
    p.exact_ = false;
    p.num_ = 0;
    p.den_ = 1;
    p.real_ = wrap_radians(radians);
    return p;
}

Phase Phase::from_radians_snapped(double radians, double tol) {
    double quarters = radians / (std::numbers::pi / 4.0);
    double nearest = std::round(quarters);
    if (std::abs(quarters - nearest) * (std::numbers::pi / 4.0) <= tol) {
        return rational(static_cast<std::int64_t>(nearest), 4);
    }
    return real(radians);
}

double Phase::radians() const noexcept {
    if (exact_) return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return real_;
}

std::complex<double> Phase::exp_i() const {
    if (exact_) {
        // Exact values for the common multiples of π/2 avoid sin(π) ≈ 1e-16 noise.
        if (den_ == 1) return num_ == 0 ? 1.0 : -1.0;
        if (den_ == 2) return num_ == 1 ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
    }
    return std::polar(1.0, radians());
}

Phase Phase::operator+(const Phase& other) const {
    if (exact_ && other.exact_) {
        std::int64_t l = std::lcm(den_, other.den_);
        return rational(num_ * (l / den_) + other.num_ * (l / other.den_), l);
    }
    return real(radians() + other.radians());
}

Phase Phase::operator-() const {
    if (exact_) return rational(-num_, den_);
    return real(-real_);
}

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

bool Phase::operator==(const Phase& other) const noexcept {
    if (exact_ != other.exact_) return false;
    if (exact_) return num_ == other.num_ && den_ == other.den_;
    return real_ == other.real_;
}

std::string Phase::to_string() const {
    if (!exact_) return std::to_string(real_);
    if (num_ == 0) return "0";
    std::string s = (num_ == 1 ? std::string() : std::to_string(num_)) + "π";
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

std::ostream& operator<<(std::ostream& out, const Phase& p) { return out << p.to_string(); }

}  // namespace zxcut
