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

#include "genw/invert.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "genw/error.hpp"

namespace genw {
namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Principal arguments of z - t_i jump by 2 pi when an iterate crosses the cut
// of (z - t_i)^{p_i}; integer exponents have no cut.
bool crosses_cut(cplx from, cplx to, const ParamSet& params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (is_integer_valued(params.exponent(i))) continue;
    const double a = principal_log(from - params.root(i)).imag();
    const double b = principal_log(to - params.root(i)).imag();
    if (std::abs(a - b) > std::numbers::pi) return true;
  }
  return false;
}

}  // namespace

InversionResult newton_invert(cplx w, cplx z0, const ParamSet& params, double tol,
                              unsigned max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "newton_invert: tol must be positive");
  InversionResult best;
  best.method = InversionMethod::kNewtonPolished;
  best.residual = std::numeric_limits<double>::infinity();

  cplx z = z0;
  bool crossed = false;
  for (unsigned it = 0;; ++it) {
    cplx h;
    try {
      h = forward_map_over_z(z, params);
    } catch (const Error&) {
      break;  // landed on a branch point
    }
    const cplx r = z * h - w;
    const double res = std::abs(r);
    if (!std::isfinite(res)) break;
    if (res < best.residual) {
      best.z = z;
      best.residual = res;
      best.iterations = it;
    }
    if (res <= tol || it == max_iter) break;

    cplx log_derivative_tail(1.0, 0.0);  // 1 + z sum p_i/(z - t_i) + z
    for (std::size_t i = 0; i < params.size(); ++i) {
      log_derivative_tail += z * params.exponent(i) / (z - params.root(i));
    }
    log_derivative_tail += z;
    const cplx derivative = h * log_derivative_tail;
    if (derivative == cplx(0.0, 0.0) || !finite(derivative)) break;
    const cplx step = r / derivative;
    const cplx next = z - step;
    if (!finite(next)) break;
    if (crosses_cut(z, next, params)) crossed = true;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z)) {
      z = next;
      // Stagnated at rounding level; one more evaluation records the final point.
      const cplx hn = forward_map_over_z(z, params);
      const double rn = std::abs(z * hn - w);
      if (rn < best.residual) {
        best.z = z;
        best.residual = rn;
        best.iterations = it + 1;
      }
      break;
    }
    z = next;
  }
  best.converged = best.residual <= tol;
  best.branch_crossed = crossed;
  return best;
}

unsigned seed_terms(cplx w, const CoefficientTable& table) {
  const double log_w = std::log(std::abs(w));
  double smallest = std::numeric_limits<double>::infinity();
  unsigned at = 1;
  double leading = -std::numeric_limits<double>::infinity();
  for (unsigned n = 1; n <= table.order(); ++n) {
    const double lc = table.scaled_coefficient(n).log_abs();
    if (!std::isfinite(lc)) continue;
    const double lt = lc + n * log_w;
    if (!std::isfinite(leading)) leading = lt;
    if (lt < smallest) {
      smallest = lt;
      at = n;
    }
    if (lt < leading - 40.0) break;  // below double rounding of the sum
  }
  return at;
}

InversionResult generalized_w(cplx w, const CoefficientTable& table, double tol,
                              unsigned max_iter, unsigned n_terms) {
  if (w == cplx(0.0, 0.0)) {
    InversionResult zero;
    zero.method = InversionMethod::kSeriesOnly;
    zero.converged = true;
    return zero;
  }
  cplx seed = evaluate_series(w, table, n_terms);
  if (!finite(seed)) seed = table.coefficient(1) * w;
  InversionResult result = newton_invert(w, seed, table.params(), tol, max_iter);
  result.series_terms = n_terms;
  result.method = std::abs(result.z - seed) > tol ? InversionMethod::kNewtonPolished
                                                  : InversionMethod::kSeriesOnly;
  return result;
}

InversionResult generalized_w(cplx w, const CoefficientTable& table, double tol,
                              unsigned max_iter) {
  if (w == cplx(0.0, 0.0)) return generalized_w(w, table, tol, max_iter, 1);
  return generalized_w(w, table, tol, max_iter, seed_terms(w, table));
}

}  // namespace genw
