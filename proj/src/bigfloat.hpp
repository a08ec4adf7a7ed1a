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

#ifndef GENW_SRC_BIGFLOAT_HPP_
#define GENW_SRC_BIGFLOAT_HPP_

#include <mpfr.h>

#include <cstdint>
#include <utility>

#include "genw/scaled_complex.hpp"

namespace genw::detail {

// Owning wrapper over mpfr_t. Every value carries its own precision; the
// arithmetic below rounds to the destination's precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(mpfr_prec_t prec, double d) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  // Binary exponent (value in [2^(e-1), 2^e)); meaningless for zero.
  long exponent() const noexcept { return mpfr_get_exp(v_); }

 private:
  mpfr_t v_;
};

struct BigComplex {
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(mpfr_prec_t prec, cplx z) : re(prec, z.real()), im(prec, z.imag()) {}

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  // Largest binary exponent of the two parts; LONG_MIN-ish for zero.
  long exponent() const noexcept;

  BigFloat re;
  BigFloat im;
};

// Scratch space for in-place complex products.
class ComplexWorkspace {
 public:
  explicit ComplexWorkspace(mpfr_prec_t prec) : a_(prec), b_(prec), c_(prec) {}

  // dst *= rhs
  void mul(BigComplex& dst, const BigComplex& rhs);
  // dst = 1 / dst
  void invert(BigComplex& dst);

 private:
  BigFloat a_, b_, c_;
};

void add(BigComplex& dst, const BigComplex& rhs);
void mul_real_ratio(BigComplex& dst, long num, unsigned long den);

ScaledComplex to_scaled(const BigComplex& z);

// exp(z) and the principal log, both in the destination precision.
void complex_exp(BigComplex& dst, const BigComplex& z);
void principal_log(BigComplex& dst, const BigComplex& z);

}  // namespace genw::detail

#endif  // GENW_SRC_BIGFLOAT_HPP_
