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

#include "bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace genw::detail {

long BigComplex::exponent() const noexcept {
  long e = LONG_MIN;
  if (!re.is_zero()) e = std::max(e, re.exponent());
  if (!im.is_zero()) e = std::max(e, im.exponent());
  return e;
}

void ComplexWorkspace::mul(BigComplex& dst, const BigComplex& rhs) {
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  mpfr_mul(a_.get(), dst.re.get(), rhs.re.get(), MPFR_RNDN);
  mpfr_mul(b_.get(), dst.im.get(), rhs.im.get(), MPFR_RNDN);
  mpfr_mul(c_.get(), dst.re.get(), rhs.im.get(), MPFR_RNDN);
  mpfr_mul(dst.im.get(), dst.im.get(), rhs.re.get(), MPFR_RNDN);
  mpfr_add(dst.im.get(), dst.im.get(), c_.get(), MPFR_RNDN);
  mpfr_sub(dst.re.get(), a_.get(), b_.get(), MPFR_RNDN);
}

void ComplexWorkspace::invert(BigComplex& dst) {
  mpfr_sqr(a_.get(), dst.re.get(), MPFR_RNDN);
  mpfr_sqr(b_.get(), dst.im.get(), MPFR_RNDN);
  mpfr_add(a_.get(), a_.get(), b_.get(), MPFR_RNDN);
  mpfr_div(dst.re.get(), dst.re.get(), a_.get(), MPFR_RNDN);
  mpfr_div(dst.im.get(), dst.im.get(), a_.get(), MPFR_RNDN);
  mpfr_neg(dst.im.get(), dst.im.get(), MPFR_RNDN);
}

void add(BigComplex& dst, const BigComplex& rhs) {
  mpfr_add(dst.re.get(), dst.re.get(), rhs.re.get(), MPFR_RNDN);
  mpfr_add(dst.im.get(), dst.im.get(), rhs.im.get(), MPFR_RNDN);
}

void mul_real_ratio(BigComplex& dst, long num, unsigned long den) {
  mpfr_mul_si(dst.re.get(), dst.re.get(), num, MPFR_RNDN);
  mpfr_mul_si(dst.im.get(), dst.im.get(), num, MPFR_RNDN);
  if (den != 1) {
    mpfr_div_ui(dst.re.get(), dst.re.get(), den, MPFR_RNDN);
    mpfr_div_ui(dst.im.get(), dst.im.get(), den, MPFR_RNDN);
  }
}

ScaledComplex to_scaled(const BigComplex& z) {
  if (z.is_zero()) return {};
  long ere = 0;
  long eim = 0;
  const double dre = z.re.is_zero() ? 0.0 : mpfr_get_d_2exp(&ere, z.re.get(), MPFR_RNDN);
  const double dim = z.im.is_zero() ? 0.0 : mpfr_get_d_2exp(&eim, z.im.get(), MPFR_RNDN);
  long e = LONG_MIN;
  if (dre != 0.0) e = std::max(e, ere);
  if (dim != 0.0) e = std::max(e, eim);
  auto shifted = [e](double d, long ex) {
    if (d == 0.0 || ex - e < -1100) return 0.0;
    return std::ldexp(d, static_cast<int>(ex - e));
  };
  return ScaledComplex(cplx(shifted(dre, ere), shifted(dim, eim)), e);
}

void complex_exp(BigComplex& dst, const BigComplex& z) {
  const mpfr_prec_t prec = dst.re.precision();
  BigFloat mod(prec);
  BigFloat s(prec);
  BigFloat c(prec);
  mpfr_exp(mod.get(), z.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  mpfr_mul(dst.re.get(), mod.get(), c.get(), MPFR_RNDN);
  mpfr_mul(dst.im.get(), mod.get(), s.get(), MPFR_RNDN);
}

void principal_log(BigComplex& dst, const BigComplex& z) {
  const mpfr_prec_t prec = dst.re.precision();
  BigFloat mod(prec);
  BigFloat im(z.im);
  if (im.is_zero()) mpfr_set_zero(im.get(), 1);
  mpfr_hypot(mod.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  mpfr_atan2(dst.im.get(), im.get(), z.re.get(), MPFR_RNDN);
  mpfr_log(dst.re.get(), mod.get(), MPFR_RNDN);
}

}  // namespace genw::detail
