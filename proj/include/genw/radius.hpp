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

#ifndef GENW_RADIUS_HPP_
#define GENW_RADIUS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genw/hyper.hpp"
#include "genw/params.hpp"
#include "genw/scaled_complex.hpp"
#include "genw/series.hpp"

namespace genw {

// ---------------------------------------------------------------------------
// Asymptotics of the F_n summands.
//
// With lambda = k / n, the summand a_n(k) of F_n behaves like
//   prod_j psi_j * n^{-m/2} * amplitude(lambda) * exp(n g(lambda)),
// built from the two one-dimensional estimates below.
// ---------------------------------------------------------------------------

/// (n p)_k / k!, exact product.
ScaledComplex pochhammer_ratio_exact(unsigned n, unsigned k, cplx p);

struct AsymptoticValue {
  ScaledComplex value;
  unsigned k = 0;         // round(n * lambda)
  double lambda = 0.0;    // k / n, the point the estimate is evaluated at
};

/// psi * sqrt(p / (2 pi n lambda (lambda + p))) * ((p+lambda)^{p+lambda} / (p^p lambda^lambda))^n
/// Throws Error(kInvalidArgument) for lambda + p = 0 or round(n lambda) = 0.
AsymptoticValue pochhammer_ratio_asymptotic(unsigned n, double lambda, cplx p);

/// -2i sin(n p pi) e^{i pi p n} for real p with p < 0 < p + lambda, 1 otherwise
/// (including every non-real p). The sign makes the estimate agree with the
/// exact product under principal square roots and powers.
cplx psi_factor(unsigned n, double lambda, cplx p);

/// (1 - n)_k exact, and its estimate (-1)^k sqrt(1-lambda) (n^lambda / ((1-lambda)^{1-lambda} e^lambda))^n.
ScaledComplex shifted_pochhammer_exact(unsigned n, unsigned k);
AsymptoticValue shifted_pochhammer_asymptotic(unsigned n, double lambda);

/// g(lambda) = -(1-S) log(1-S) + sum [(p_i+l_i) log(p_i+l_i) - p_i log p_i - l_i log(-e t_i l_i)],
/// S = sum l_i, principal logs, x log x := 0 at x = 0.
cplx exponent_g(std::span<const cplx> lambda, const ParamSet& params);

/// sqrt(1 - S) prod sqrt(p_i / (2 pi l_i (p_i + l_i))), principal roots.
/// Throws Error(kInvalidArgument) when some l_i = 0 or p_i + l_i = 0.
cplx amplitude(std::span<const cplx> lambda, const ParamSet& params);

struct AsymptoticCheck {
  ScaledComplex exact;
  ScaledComplex asymptotic;
  cplx ratio() const { return genw::ratio(exact, asymptotic); }
};

/// Exact a_n(k) against its saddle-free asymptotic at lambda = k / n. Requires
/// every k_i >= 1 and weight <= n - 1.
AsymptoticCheck coefficient_asymptotic_check(unsigned n, const MultiIndex& k, const ParamSet& params);

// ---------------------------------------------------------------------------
// Saddle points and the conjectured radius.
// ---------------------------------------------------------------------------

struct BranchOffsets {
  std::vector<int> offsets;    // L_i = round(Im[...] / 2 pi)
  double max_defect = 0.0;     // distance of [...] / 2 pi i from the integers
  bool anomalous = false;      // defect above 1e-6
};

/// Rounds [log(1 - S) + log(p_i + phi_i) - log(-t_i phi_i)] / (2 pi i) for each
/// i. On a solution of the quadratic system the bracket is an exact multiple
/// of 2 pi i. The stationary point of g(lambda) + 2 pi i sum l_j lambda_j at
/// phi is obtained for l = -L.
BranchOffsets log_branch_offsets(std::span<const cplx> phi, const ParamSet& params);

struct SaddlePoint {
  std::vector<cplx> lambda;
  cplx s{1.0, 0.0};               // 1 - sum lambda
  std::vector<double> residuals;  // |(1 - S)(p_i + lambda_i) + t_i lambda_i|
  cplx g_value{0.0, 0.0};
  BranchOffsets offsets;
  double hessian_condition = 1.0;  // smallest / largest singular value of g''
  bool degenerate = false;
  bool converged = true;
};

/// All solutions of (1 - S)(p_i + lambda_i) + t_i lambda_i = 0. Eliminating
/// lambda_i = -s p_i / (s + t_i), s = 1 - S, leaves a monic polynomial of
/// degree m + 1 in s whose roots are found simultaneously (Aberth-Ehrlich) and
/// then refined on the full system by Newton's method.
std::vector<SaddlePoint> saddle_candidates(const ParamSet& params);

struct ConjecturedRadius {
  double value = 0.0;          // closed form, product of principal powers
  double via_exponent = 0.0;   // 1 / (e prod |(-t_i)^{-p_i}| e^{Re g - 2 pi Im sum l_j phi_j})
  double displayed = 0.0;      // the uncorrected display, kept for comparison only
  double route_gap = 0.0;      // |value - via_exponent| / via_exponent
  bool consistent = true;      // route_gap <= 1e-8
};

/// R = |exp(S - 1 - 2 pi i sum l_j phi_j) (1-S)^{1-S} prod (-t_j)^{p_j} (-t_j phi_j)^{phi_j} p_j^{p_j} / (p_j+phi_j)^{p_j+phi_j}|.
ConjecturedRadius conjectured_radius(std::span<const cplx> phi, std::span<const int> l,
                                     const ParamSet& params);

struct EmpiricalOptions {
  unsigned lo = 0;
  unsigned hi = 0;
  // Trailing-window maximum of log|c_n| before fitting, as a limsup proxy.
  bool envelope = true;
  // Fit a + b n + c log n rather than a + b n.
  bool log_correction = true;
};

/// Root-test estimate exp(-b) of the radius from the growth of log|c_n| over
/// n in [lo, hi]. Throws Error(kInvalidArgument) if the window is empty, out of
/// range or all coefficients vanish on it.
double empirical_radius(const CoefficientTable& table, const EmpiricalOptions& options);
double empirical_radius(const CoefficientTable& table, unsigned lo, unsigned hi);

struct RadiusCandidate {
  std::size_t saddle = 0;
  std::vector<int> l;
  ConjecturedRadius radius;
  bool direct = false;  // l = -log_branch_offsets
  double relative_gap = 0.0;
};

struct RadiusReport {
  ParamSet params;
  unsigned order = 0;
  unsigned window_lo = 0;
  unsigned window_hi = 0;
  double empirical = 0.0;
  std::vector<SaddlePoint> saddles;
  std::vector<RadiusCandidate> candidates;
  std::optional<std::size_t> best_match;
  double relative_gap = 0.0;
  double match_tolerance = 0.05;
  bool matched = false;
  // Smallest radius over saddles with their direct l, the prediction that
  // does not look at the coefficients.
  std::optional<double> direct_prediction;
  std::vector<double> log_abs_coefficients;  // log|c_n|, n = 1..order
  std::vector<std::string> notes;
};

/// Requires order >= 50.
RadiusReport radius_report(const ParamSet& params, unsigned order);
RadiusReport radius_report(const CoefficientTable& table);

}  // namespace genw

#endif  // GENW_RADIUS_HPP_
