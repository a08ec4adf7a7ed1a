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

#ifndef GENW_INVERT_HPP_
#define GENW_INVERT_HPP_

#include "genw/params.hpp"
#include "genw/scaled_complex.hpp"
#include "genw/series.hpp"

namespace genw {

enum class InversionMethod { kSeriesOnly, kNewtonPolished };

struct InversionResult {
  cplx z{0.0, 0.0};
  double residual = 0.0;  // |f(z) - w|
  unsigned iterations = 0;
  InversionMethod method = InversionMethod::kNewtonPolished;
  bool converged = false;
  // Some iterate jumped across the principal cut of a non-integer power.
  bool branch_crossed = false;
  // Terms of the series used for the seed (0 when no series seed was used).
  unsigned series_terms = 0;
};

/// Newton iteration on f(z) = w using f'(z) = (f(z)/z) (1 + z sum p_i/(z - t_i) + z).
/// Never throws for non-convergence; the best iterate is returned with
/// converged = false.
InversionResult newton_invert(cplx w, cplx z0, const ParamSet& params, double tol,
                              unsigned max_iter = 100);

/// The truncation the series seed uses: the index of the smallest |c_n w^n|
/// over the table, stopping early once the terms drop below rounding level.
unsigned seed_terms(cplx w, const CoefficientTable& table);

/// W^(p)(w) on the branch through 0: series seed, then Newton polish.
InversionResult generalized_w(cplx w, const CoefficientTable& table, double tol,
                              unsigned max_iter = 100);

/// As above but with a fixed number of series terms for the seed.
InversionResult generalized_w(cplx w, const CoefficientTable& table, double tol,
                              unsigned max_iter, unsigned n_terms);

}  // namespace genw

#endif  // GENW_INVERT_HPP_
