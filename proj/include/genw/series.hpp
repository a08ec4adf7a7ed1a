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

#ifndef GENW_SERIES_HPP_
#define GENW_SERIES_HPP_

#include <cstddef>
#include <vector>

#include "genw/params.hpp"
#include "genw/scaled_complex.hpp"

namespace genw {

/// f(z) = z prod (z - t_i)^{p_i} e^z with principal powers. Throws
/// Error(kDomain) at a branch point or pole z = t_i.
cplx forward_map(cplx z, const ParamSet& params);

/// f(z) / z = prod (z - t_i)^{p_i} e^z, finite at z = 0.
cplx forward_map_over_z(cplx z, const ParamSet& params);

// Reduction of y = (z - t0)^{p0} prod (z - t_i)^{p_i} e^z to the standard
// form x = w prod (w - t_i')^{p_i'} e^w with w = (z - t0) / p0:
//   x = argument_scale * y^{root_power},  z = variable_scale * w + variable_shift.
// The identity holds on the branch where the principal powers compose, which
// includes a neighbourhood of z = t0 for moderate parameters.
struct NormalFormTransform {
  ParamSet params_out;
  cplx argument_scale{1.0, 0.0};
  cplx root_power{1.0, 0.0};
  cplx variable_scale{1.0, 0.0};
  cplx variable_shift{0.0, 0.0};

  cplx to_standard_argument(cplx y) const;
  cplx to_original_variable(cplx w) const { return variable_scale * w + variable_shift; }
};

/// Throws Error(kInvalidArgument) for p0 = 0 or some t_i = t0.
NormalFormTransform normalize_general_form(cplx t0, cplx p0, const ParamSet& params);

/// (y as defined above) evaluated directly; used to check transforms.
cplx general_form_map(cplx z, cplx t0, cplx p0, const ParamSet& params);

/// c_n = (-n)^{n-1}/n! prod (-t_i)^{-n p_i} F_n.
ScaledComplex taylor_coefficient(unsigned n, const ParamSet& params);

// Taylor coefficients c_1..c_N of the inverse around 0, with F_1..F_N.
// Immutable once built.
class CoefficientTable {
 public:
  CoefficientTable(ParamSet params, std::vector<ScaledComplex> coefficients,
                   std::vector<ScaledComplex> f_values);

  const ParamSet& params() const noexcept { return params_; }
  unsigned order() const noexcept { return static_cast<unsigned>(coefficients_.size()); }

  // 1-based, n in [1, order()].
  const ScaledComplex& scaled_coefficient(unsigned n) const { return coefficients_.at(n - 1); }
  const ScaledComplex& scaled_f_value(unsigned n) const { return f_values_.at(n - 1); }
  cplx coefficient(unsigned n) const { return scaled_coefficient(n).to_complex(); }
  cplx f_value(unsigned n) const { return scaled_f_value(n).to_complex(); }

 private:
  ParamSet params_;
  std::vector<ScaledComplex> coefficients_;
  std::vector<ScaledComplex> f_values_;
};

/// threads = 0 picks std::thread::hardware_concurrency(). The result does not
/// depend on the thread count.
CoefficientTable build_table(const ParamSet& params, unsigned order, unsigned threads = 0);

/// Partial sum sum_{n=1}^{n_terms} c_n x^n by Horner's rule.
cplx evaluate_series(cplx x, const CoefficientTable& table, unsigned n_terms);
cplx evaluate_series(cplx x, const CoefficientTable& table);

}  // namespace genw

#endif  // GENW_SERIES_HPP_
