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

#ifndef GENW_SCALED_COMPLEX_HPP_
#define GENW_SCALED_COMPLEX_HPP_

#include <complex>
#include <cstdint>

namespace genw {

using cplx = std::complex<double>;

// A complex number stored as mantissa * 2^exponent, with the larger of the
// mantissa's |re|, |im| in [0.5, 1) (or an exact zero). Coefficients of the
// inverse series leave the double range long before n reaches a few hundred,
// so tables and asymptotic checks carry values in this form.
class ScaledComplex {
 public:
  ScaledComplex() = default;
  ScaledComplex(cplx value);  // NOLINT(google-explicit-constructor)
  ScaledComplex(cplx mantissa, std::int64_t exponent);

  // exp(log_value) without intermediate overflow.
  static ScaledComplex from_log(cplx log_value);

  const cplx& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return mantissa_ == cplx(0.0, 0.0); }
  bool is_finite() const noexcept;

  // May overflow to inf or underflow to 0.
  cplx to_complex() const;
  // log|z|; -inf for zero.
  double log_abs() const;
  double arg() const;

  ScaledComplex& operator*=(const ScaledComplex& rhs);
  ScaledComplex& operator/=(const ScaledComplex& rhs);
  ScaledComplex& operator+=(const ScaledComplex& rhs);
  ScaledComplex& operator-=(const ScaledComplex& rhs);

  friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
  friend ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
  friend ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }
  friend ScaledComplex operator-(ScaledComplex a, const ScaledComplex& b) { return a -= b; }
  ScaledComplex operator-() const { return ScaledComplex(-mantissa_, exponent_); }

 private:
  void normalize();

  cplx mantissa_{0.0, 0.0};
  std::int64_t exponent_ = 0;
};

// Ratio a / b as an ordinary complex number (well defined when the
// magnitudes are comparable even if both overflow doubles).
cplx ratio(const ScaledComplex& a, const ScaledComplex& b);

// Principal branch helpers: arg in (-pi, pi]. A negative real with a
// negative-zero imaginary part is treated as lying on the upper side.
cplx principal_log(cplx z);
// z^a with principal log; integer exponents use exact repeated products, so
// 0^k is 0 for positive integer k. Throws Error(kDomain) for 0^a otherwise.
cplx principal_pow(cplx z, cplx a);
bool is_integer_valued(cplx a) noexcept;

// sin(pi x), cos(pi x) with exact zeros at integers / half integers.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace genw

#endif  // GENW_SCALED_COMPLEX_HPP_
