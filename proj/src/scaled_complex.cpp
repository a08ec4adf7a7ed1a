// Copyright 2026 The genw Authors
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

#include "genw/scaled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "genw/error.hpp"

namespace genw {

ScaledComplex::ScaledComplex(cplx value) : mantissa_(value) { normalize(); }

ScaledComplex::ScaledComplex(cplx mantissa, std::int64_t exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

void ScaledComplex::normalize() {
  const double big = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
  if (big == 0.0) {
    mantissa_ = cplx(0.0, 0.0);
    exponent_ = 0;
    return;
  }
  if (!std::isfinite(big)) return;
  int e = 0;
  std::frexp(big, &e);
  mantissa_ = cplx(std::ldexp(mantissa_.real(), -e), std::ldexp(mantissa_.imag(), -e));
  exponent_ += e;
}

ScaledComplex ScaledComplex::from_log(cplx log_value) {
  if (std::isinf(log_value.real()) && log_value.real() < 0) return {};
  const double log2_mod = log_value.real() / std::numbers::ln2;
  const double whole = std::floor(log2_mod);
  const double frac = log_value.real() - whole * std::numbers::ln2;
  const double mod = std::exp(frac);
  return ScaledComplex(std::polar(mod, log_value.imag()), static_cast<std::int64_t>(whole));
}

bool ScaledComplex::is_finite() const noexcept {
  return std::isfinite(mantissa_.real()) && std::isfinite(mantissa_.imag());
}

cplx ScaledComplex::to_complex() const {
  if (exponent_ > std::numeric_limits<int>::max() / 2) {
    return {mantissa_.real() == 0 ? 0.0 : std::copysign(HUGE_VAL, mantissa_.real()),
            mantissa_.imag() == 0 ? 0.0 : std::copysign(HUGE_VAL, mantissa_.imag())};
  }
  if (exponent_ < std::numeric_limits<int>::min() / 2) return {0.0, 0.0};
  const int e = static_cast<int>(exponent_);
  return {std::ldexp(mantissa_.real(), e), std::ldexp(mantissa_.imag(), e)};
}

double ScaledComplex::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(mantissa_)) + static_cast<double>(exponent_) * std::numbers::ln2;
}

double ScaledComplex::arg() const { return std::arg(mantissa_); }

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& rhs) {
  mantissa_ *= rhs.mantissa_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& rhs) {
  mantissa_ /= rhs.mantissa_;
  exponent_ -= rhs.exponent_;
  normalize();
  return *this;
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t e = std::max(exponent_, rhs.exponent_);
  auto shift = [e](const cplx& m, std::int64_t ex) {
    const std::int64_t d = ex - e;
    if (d < -1100) return cplx(0.0, 0.0);
    return cplx(std::ldexp(m.real(), static_cast<int>(d)), std::ldexp(m.imag(), static_cast<int>(d)));
  };
  mantissa_ = shift(mantissa_, exponent_) + shift(rhs.mantissa_, rhs.exponent_);
  exponent_ = e;
  normalize();
  return *this;
}

ScaledComplex& ScaledComplex::operator-=(const ScaledComplex& rhs) { return *this += -rhs; }

cplx ratio(const ScaledComplex& a, const ScaledComplex& b) {
  return (a / b).to_complex();
}

cplx principal_log(cplx z) {
  // atan2(+0, x<0) = pi; adding 0.0 maps -0.0 to +0.0.
  const double im = z.imag() + 0.0;
  return {std::log(std::abs(z)), std::atan2(im, z.real())};
}

bool is_integer_valued(cplx a) noexcept {
  return a.imag() == 0.0 && std::isfinite(a.real()) && std::floor(a.real()) == a.real();
}

cplx principal_pow(cplx z, cplx a) {
  if (is_integer_valued(a) && std::abs(a.real()) <= 64.0) {
    long k = static_cast<long>(a.real());
    if (k < 0 && z == cplx(0.0, 0.0)) {
      throw Error(ErrorCode::kDomain, "zero base raised to a negative integer power");
    }
    cplx base = k < 0 ? 1.0 / z : z;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    cplx result(1.0, 0.0);
    while (e != 0) {
      if (e & 1UL) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }
  if (z == cplx(0.0, 0.0)) {
    if (a.real() > 0.0) return {0.0, 0.0};
    throw Error(ErrorCode::kDomain, "zero base raised to a power with non-positive real part");
  }
  return std::exp(a * principal_log(z));
}

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r == std::floor(r)) return 0.0;
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);  // [0, 2)
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

}  // namespace genw
