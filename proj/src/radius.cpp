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

#include "genw/radius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "genw/error.hpp"

namespace genw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx xlogx(cplx x) { return x == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : x * principal_log(x); }

cplx principal_sqrt(cplx z) { return std::sqrt(cplx(z.real(), z.imag() + 0.0)); }

cplx sum_of(std::span<const cplx> v) {
  cplx s(0.0, 0.0);
  for (cplx x : v) s += x;
  return s;
}

void require_size(std::span<const cplx> lambda, const ParamSet& params) {
  if (lambda.size() != params.size()) {
    throw Error(ErrorCode::kInvalidArgument, "lambda has " + std::to_string(lambda.size()) +
                                                 " entries, expected " +
                                                 std::to_string(params.size()));
  }
}

unsigned nearest_count(unsigned n, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be a nonnegative real");
  }
  const double k = std::nearbyint(static_cast<double>(n) * lambda);
  if (k > 4294967295.0) throw Error(ErrorCode::kInvalidArgument, "n * lambda too large");
  return static_cast<unsigned>(k);
}

// ---- saddle system -------------------------------------------------------

using Poly = std::vector<cplx>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (s - 1) prod (s + t_j) - s sum_j p_j prod_{k != j} (s + t_k)
Poly saddle_polynomial(const ParamSet& params) {
  const std::size_t m = params.size();
  Poly full{cplx(-1.0, 0.0), cplx(1.0, 0.0)};
  for (std::size_t j = 0; j < m; ++j) full = poly_mul(full, {params.root(j), cplx(1.0, 0.0)});
  for (std::size_t j = 0; j < m; ++j) {
    Poly term{cplx(0.0, 0.0), -params.exponent(j)};
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) term = poly_mul(term, {params.root(k), cplx(1.0, 0.0)});
    for (std::size_t i = 0; i < term.size(); ++i) full[i] += term[i];
  }
  return full;
}

std::pair<cplx, cplx> poly_eval(const Poly& a, cplx z) {
  cplx v(0.0, 0.0), d(0.0, 0.0);
  for (std::size_t i = a.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + a[i];
  }
  return {v, d};
}

struct PolyRoot {
  cplx value;
  bool converged = false;
};

// Aberth-Ehrlich simultaneous iteration for a polynomial with nonzero
// leading coefficient.
std::vector<PolyRoot> aberth_roots(const Poly& a) {
  const std::size_t d = a.size() - 1;
  const cplx lead = a[d];
  double bound = 0.0;
  for (std::size_t k = 1; k <= d; ++k)
    bound = std::max(bound, std::pow(std::abs(a[d - k] / lead), 1.0 / static_cast<double>(k)));
  bound = std::max(bound, 1e-3);
  const cplx center = -a[d - 1] / (lead * static_cast<double>(d));

  std::vector<PolyRoot> roots(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
    roots[k].value = center + bound * cplx(std::cos(angle), std::sin(angle));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 500; ++iter) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (roots[k].converged) continue;
      const cplx z = roots[k].value;
      const auto [v, dv] = poly_eval(a, z);
      if (v == cplx(0.0, 0.0)) {
        roots[k].converged = true;
        continue;
      }
      const cplx ratio = v / dv;
      cplx repulsion(0.0, 0.0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (z - roots[j].value);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      roots[k].value = z - step;
      if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(z)))
        roots[k].converged = true;
      else
        all = false;
    }
    if (all) break;
  }
  return roots;
}

std::vector<cplx> system_residual(std::span<const cplx> lambda, const ParamSet& params) {
  const cplx s = 1.0 - sum_of(lambda);
  std::vector<cplx> f(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    f[i] = s * (params.exponent(i) + lambda[i]) + params.root(i) * lambda[i];
  return f;
}

double max_abs(std::span<const cplx> v) {
  double r = 0.0;
  for (cplx x : v) r = std::max(r, std::abs(x));
  return r;
}

bool all_finite(std::span<const cplx> v) {
  return std::all_of(v.begin(), v.end(), [](cplx x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

constexpr double kResidualTolerance = 1e-10;

// Newton's method on the full quadratic system, returning the best iterate.
std::pair<std::vector<cplx>, bool> refine_saddle(std::vector<cplx> lambda, const ParamSet& params) {
  const auto m = static_cast<Eigen::Index>(params.size());
  std::vector<cplx> best = lambda;
  double best_norm = all_finite(lambda) ? max_abs(system_residual(lambda, params))
                                        : std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int iter = 0; iter < 60 && stalled < 3; ++iter) {
    const auto f = system_residual(lambda, params);
    const cplx s = 1.0 - sum_of(lambda);
    Eigen::MatrixXcd jac(m, m);
    Eigen::VectorXcd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      rhs(i) = -f[ui];
      for (Eigen::Index j = 0; j < m; ++j) jac(i, j) = -(params.exponent(ui) + lambda[ui]);
      jac(i, i) += s + params.root(ui);
    }
    const Eigen::VectorXcd step = jac.fullPivLu().solve(rhs);
    for (Eigen::Index i = 0; i < m; ++i) lambda[static_cast<std::size_t>(i)] += step(i);
    if (!all_finite(lambda)) break;
    const double norm = max_abs(system_residual(lambda, params));
    if (norm < best_norm) {
      stalled = norm < 0.5 * best_norm ? 0 : stalled + 1;
      best_norm = norm;
      best = lambda;
    } else {
      ++stalled;
    }
    if (best_norm == 0.0) break;
  }
  return {best, best_norm <= kResidualTolerance};
}

double hessian_condition(std::span<const cplx> lambda, const ParamSet& params) {
  const auto m = static_cast<Eigen::Index>(params.size());
  const cplx s = 1.0 - sum_of(lambda);
  Eigen::MatrixXcd h(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (Eigen::Index j = 0; j < m; ++j) h(i, j) = -1.0 / s;
    h(i, i) += 1.0 / (params.exponent(ui) + lambda[ui]) - 1.0 / lambda[ui];
  }
  if (!h.allFinite()) return 0.0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(m - 1) / sv(0);
}

SaddlePoint describe_saddle(std::vector<cplx> lambda, bool converged, const ParamSet& params) {
  SaddlePoint sp;
  sp.s = 1.0 - sum_of(lambda);
  for (cplx r : system_residual(lambda, params)) sp.residuals.push_back(std::abs(r));
  sp.converged = converged;
  try {
    sp.g_value = exponent_g(lambda, params);
  } catch (const Error&) {
    sp.g_value = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  }
  sp.offsets = log_branch_offsets(lambda, params);
  sp.hessian_condition = hessian_condition(lambda, params);
  sp.degenerate = sp.hessian_condition < 1e-8;
  sp.lambda = std::move(lambda);
  return sp;
}

bool same_saddle(std::span<const cplx> a, std::span<const cplx> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-8 * (1.0 + std::abs(a[i]))) return false;
  return true;
}

// ---- empirical fit -------------------------------------------------------

struct Sample {
  double n;
  double u;
};

}  // namespace

// ---------------------------------------------------------------------------

cplx psi_factor(unsigned n, double lambda, cplx p) {
  if (p.imag() != 0.0) return {1.0, 0.0};
  const double pr = p.real();
  if (!(pr < 0.0 && 0.0 < pr + lambda)) return {1.0, 0.0};
  const double x = static_cast<double>(n) * pr;
  const double s = sin_pi(x);
  const double c = cos_pi(x);
  // -2i s (c + i s)
  return {2.0 * s * s, -2.0 * s * c};
}

ScaledComplex pochhammer_ratio_exact(unsigned n, unsigned k, cplx p) {
  const cplx np = static_cast<double>(n) * p;
  ScaledComplex acc(cplx(1.0, 0.0));
  for (unsigned j = 0; j < k; ++j)
    acc *= ScaledComplex((np + static_cast<double>(j)) / static_cast<double>(j + 1));
  return acc;
}

AsymptoticValue pochhammer_ratio_asymptotic(unsigned n, double lambda, cplx p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (p == cplx(0.0, 0.0)) throw Error(ErrorCode::kInvalidArgument, "p must be nonzero");
  AsymptoticValue out;
  out.k = nearest_count(n, lambda);
  if (out.k == 0) throw Error(ErrorCode::kInvalidArgument, "n * lambda rounds to 0");
  const double nd = static_cast<double>(n);
  out.lambda = static_cast<double>(out.k) / nd;
  const cplx pl = p + out.lambda;
  if (pl == cplx(0.0, 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda + p = 0");

  const cplx exponent =
      nd * (xlogx(pl) - xlogx(p) - out.lambda * std::log(out.lambda)) +
      0.5 * principal_log(p / (kTwoPi * nd * out.lambda * pl));
  out.value = ScaledComplex::from_log(exponent) * ScaledComplex(psi_factor(n, out.lambda, p));
  return out;
}

ScaledComplex shifted_pochhammer_exact(unsigned n, unsigned k) {
  ScaledComplex acc(cplx(1.0, 0.0));
  for (unsigned j = 0; j < k; ++j)
    acc *= ScaledComplex(cplx(1.0 - static_cast<double>(n) + static_cast<double>(j), 0.0));
  return acc;
}

AsymptoticValue shifted_pochhammer_asymptotic(unsigned n, double lambda) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  AsymptoticValue out;
  out.k = nearest_count(n, lambda);
  if (out.k == 0 || out.k >= n)
    throw Error(ErrorCode::kInvalidArgument, "n * lambda must round into [1, n-1]");
  const double nd = static_cast<double>(n);
  const double lam = static_cast<double>(out.k) / nd;
  out.lambda = lam;
  const double log_mag = nd * (lam * std::log(nd) - (1.0 - lam) * std::log1p(-lam) - lam) +
                         0.5 * std::log1p(-lam);
  out.value = ScaledComplex::from_log(cplx(log_mag, 0.0));
  if (out.k % 2 == 1) out.value = -out.value;
  return out;
}

cplx exponent_g(std::span<const cplx> lambda, const ParamSet& params) {
  require_size(lambda, params);
  const cplx s = 1.0 - sum_of(lambda);
  cplx g = -xlogx(s);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const cplx p = params.exponent(i);
    const cplx l = lambda[i];
    g += xlogx(p + l) - xlogx(p);
    if (l != cplx(0.0, 0.0)) g -= l * (1.0 + principal_log(-params.root(i) * l));
  }
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
    throw Error(ErrorCode::kDomain, "g is not finite at this lambda");
  return g;
}

cplx amplitude(std::span<const cplx> lambda, const ParamSet& params) {
  require_size(lambda, params);
  cplx a = principal_sqrt(1.0 - sum_of(lambda));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const cplx p = params.exponent(i);
    const cplx l = lambda[i];
    if (l == cplx(0.0, 0.0) || p + l == cplx(0.0, 0.0))
      throw Error(ErrorCode::kInvalidArgument, "amplitude is singular at lambda_" +
                                                   std::to_string(i));
    a *= principal_sqrt(p / (kTwoPi * l * (p + l)));
  }
  return a;
}

AsymptoticCheck coefficient_asymptotic_check(unsigned n, const MultiIndex& k,
                                             const ParamSet& params) {
  if (k.size() != params.size())
    throw Error(ErrorCode::kInvalidArgument, "multi-index length does not match parameters");
  if (n == 0 || k.weight() > n - 1)
    throw Error(ErrorCode::kInvalidArgument, "multi-index weight must be at most n - 1");
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] == 0)
      throw Error(ErrorCode::kInvalidArgument, "multi-index must be interior (all k_i >= 1)");

  const double nd = static_cast<double>(n);
  AsymptoticCheck out;
  out.exact = shifted_pochhammer_exact(n, k.weight());
  std::vector<cplx> lambda(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    out.exact *= pochhammer_ratio_exact(n, k[i], params.exponent(i));
    const ScaledComplex inv(1.0 / (nd * params.root(i)));
    for (unsigned j = 0; j < k[i]; ++j) out.exact *= inv;
    lambda[i] = cplx(static_cast<double>(k[i]) / nd, 0.0);
  }

  cplx prefactor = amplitude(lambda, params);
  for (std::size_t i = 0; i < k.size(); ++i)
    prefactor *= psi_factor(n, lambda[i].real(), params.exponent(i));
  prefactor *= std::pow(nd, -0.5 * static_cast<double>(k.size()));
  out.asymptotic = ScaledComplex::from_log(nd * exponent_g(lambda, params)) * ScaledComplex(prefactor);
  return out;
}

BranchOffsets log_branch_offsets(std::span<const cplx> phi, const ParamSet& params) {
  require_size(phi, params);
  BranchOffsets out;
  out.offsets.assign(phi.size(), 0);
  const cplx s = 1.0 - sum_of(phi);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const cplx a = s;
    const cplx b = params.exponent(i) + phi[i];
    const cplx c = -params.root(i) * phi[i];
    if (a == cplx(0.0, 0.0) || b == cplx(0.0, 0.0) || c == cplx(0.0, 0.0)) {
      out.max_defect = std::numeric_limits<double>::infinity();
      continue;
    }
    const cplx bracket = (principal_log(a) + principal_log(b) - principal_log(c)) / kTwoPi;
    const double rounded = std::nearbyint(bracket.imag());
    out.offsets[i] = static_cast<int>(rounded);
    out.max_defect = std::max({out.max_defect, std::abs(bracket.imag() - rounded),
                               std::abs(bracket.real())});
  }
  out.anomalous = !(out.max_defect <= 1e-6);
  return out;
}

std::vector<SaddlePoint> saddle_candidates(const ParamSet& params) {
  if (params.empty()) throw Error(ErrorCode::kInvalidArgument, "saddle points need m >= 1");
  const std::size_t m = params.size();
  const auto roots = aberth_roots(saddle_polynomial(params));

  std::vector<SaddlePoint> out;
  auto add = [&](std::vector<cplx> lambda, bool converged) {
    for (const auto& sp : out)
      if (same_saddle(sp.lambda, lambda)) return;
    out.push_back(describe_saddle(std::move(lambda), converged, params));
  };

  for (const auto& root : roots) {
    const cplx s = root.value;
    bool on_pole = false;
    for (std::size_t j = 0; j < m; ++j)
      if (std::abs(s + params.root(j)) <= 1e-9 * (1.0 + std::abs(s))) on_pole = true;

    if (!on_pole) {
      std::vector<cplx> lambda(m);
      for (std::size_t j = 0; j < m; ++j)
        lambda[j] = -s * params.exponent(j) / (s + params.root(j));
      auto [refined, ok] = refine_saddle(std::move(lambda), params);
      add(std::move(refined), ok && root.converged);
      continue;
    }
    // s sits on a pole of the elimination; restart the full system nearby.
    bool found = false;
    for (int q = 0; q < 4 && !found; ++q) {
      const cplx shifted = s + 1e-4 * (1.0 + std::abs(s)) * std::polar(1.0, kPi * (0.25 + 0.5 * q));
      std::vector<cplx> lambda(m);
      for (std::size_t j = 0; j < m; ++j)
        lambda[j] = -shifted * params.exponent(j) / (shifted + params.root(j));
      auto [refined, ok] = refine_saddle(std::move(lambda), params);
      if (ok) {
        add(std::move(refined), true);
        found = true;
      }
    }
    if (!found) {
      std::vector<cplx> lambda(m);
      for (std::size_t j = 0; j < m; ++j)
        lambda[j] = -s * params.exponent(j) / (s + params.root(j));
      add(std::move(lambda), false);
    }
  }
  return out;
}

ConjecturedRadius conjectured_radius(std::span<const cplx> phi, std::span<const int> l,
                                     const ParamSet& params) {
  require_size(phi, params);
  if (l.size() != params.size())
    throw Error(ErrorCode::kInvalidArgument, "l has the wrong number of entries");
  const cplx sum = sum_of(phi);
  const cplx s = 1.0 - sum;
  cplx lphi(0.0, 0.0);
  for (std::size_t i = 0; i < phi.size(); ++i) lphi += static_cast<double>(l[i]) * phi[i];
  const cplx two_pi_i(0.0, kTwoPi);

  ConjecturedRadius out;

  ScaledComplex closed(std::exp(sum - 1.0 - two_pi_i * lphi));
  closed *= ScaledComplex(principal_pow(s, s));
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const cplx t = params.root(i);
    const cplx p = params.exponent(i);
    closed *= ScaledComplex(principal_pow(-t, p));
    closed *= ScaledComplex(principal_pow(-t * phi[i], phi[i]));
    closed *= ScaledComplex(principal_pow(p, p));
    closed /= ScaledComplex(principal_pow(p + phi[i], p + phi[i]));
  }
  out.value = std::exp(closed.log_abs());

  double log_r = -1.0 - exponent_g(phi, params).real() + kTwoPi * lphi.imag();
  for (std::size_t i = 0; i < phi.size(); ++i)
    log_r += (params.exponent(i) * principal_log(-params.root(i))).real();
  out.via_exponent = std::exp(log_r);

  try {
    ScaledComplex shown(std::exp(two_pi_i * lphi - 1.0));
    shown *= ScaledComplex(principal_pow(s, s));
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const cplx t = params.root(i);
      const cplx p = params.exponent(i);
      shown *= ScaledComplex(principal_pow(t / (p + phi[i]), p + phi[i]));
      shown *= ScaledComplex(principal_pow(p, p));
      shown *= ScaledComplex(principal_pow(phi[i], phi[i]));
    }
    out.displayed = std::exp(shown.log_abs());
  } catch (const Error&) {
    out.displayed = std::numeric_limits<double>::quiet_NaN();
  }

  out.route_gap = std::abs(out.value - out.via_exponent) / out.via_exponent;
  out.consistent = out.route_gap <= 1e-8;
  return out;
}

double empirical_radius(const CoefficientTable& table, const EmpiricalOptions& options) {
  const unsigned lo = options.lo;
  const unsigned hi = options.hi;
  if (lo < 1 || hi <= lo || hi > table.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "fit window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] must satisfy 1 <= lo < hi <= N = " + std::to_string(table.order()));
  }
  const unsigned len = hi - lo + 1;
  std::vector<double> u(len);
  bool any = false;
  for (unsigned i = 0; i < len; ++i) {
    u[i] = table.scaled_coefficient(lo + i).log_abs();
    any = any || std::isfinite(u[i]);
  }
  if (!any) throw Error(ErrorCode::kInvalidArgument, "all coefficients vanish on the fit window");

  std::vector<Sample> samples;
  if (options.envelope) {
    const unsigned width = std::max(2u, len / 10);
    for (unsigned i = width - 1; i < len; ++i) {
      double best = -std::numeric_limits<double>::infinity();
      for (unsigned j = i + 1 - width; j <= i; ++j) best = std::max(best, u[j]);
      if (std::isfinite(best)) samples.push_back({static_cast<double>(lo + i), best});
    }
  } else {
    for (unsigned i = 0; i < len; ++i)
      if (std::isfinite(u[i])) samples.push_back({static_cast<double>(lo + i), u[i]});
  }
  const Eigen::Index cols = options.log_correction ? 3 : 2;
  if (samples.size() < static_cast<std::size_t>(cols) + 1)
    throw Error(ErrorCode::kInvalidArgument, "too few nonzero coefficients on the fit window");

  const double scale = static_cast<double>(hi);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(samples.size()), cols);
  Eigen::VectorXd b(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    a(r, 0) = 1.0;
    a(r, 1) = samples[i].n / scale;
    if (cols == 3) a(r, 2) = std::log(samples[i].n);
    b(r) = samples[i].u;
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
  return std::exp(-coef(1) / scale);
}

double empirical_radius(const CoefficientTable& table, unsigned lo, unsigned hi) {
  EmpiricalOptions options;
  options.lo = lo;
  options.hi = hi;
  return empirical_radius(table, options);
}

RadiusReport radius_report(const ParamSet& params, unsigned order) {
  if (order < 50) throw Error(ErrorCode::kInvalidArgument, "radius reports need N >= 50");
  return radius_report(build_table(params, order));
}

RadiusReport radius_report(const CoefficientTable& table) {
  if (table.order() < 50) throw Error(ErrorCode::kInvalidArgument, "radius reports need N >= 50");
  const ParamSet& params = table.params();
  const std::size_t m = params.size();

  RadiusReport report;
  report.params = params;
  report.order = table.order();
  report.window_lo = table.order() / 2;
  report.window_hi = table.order();
  report.empirical = empirical_radius(table, report.window_lo, report.window_hi);
  report.log_abs_coefficients.reserve(table.order());
  for (unsigned n = 1; n <= table.order(); ++n)
    report.log_abs_coefficients.push_back(table.scaled_coefficient(n).log_abs());

  auto push_candidate = [&](std::size_t saddle, std::vector<int> l, std::span<const cplx> phi,
                            bool direct) {
    RadiusCandidate c;
    c.saddle = saddle;
    c.radius = conjectured_radius(phi, l, params);
    c.l = std::move(l);
    c.direct = direct;
    c.relative_gap = std::abs(c.radius.value - report.empirical) / report.empirical;
    if (!c.radius.consistent)
      report.notes.push_back("saddle " + std::to_string(saddle) +
                             ": closed form and exponent route disagree (gap " +
                             std::to_string(c.radius.route_gap) + ")");
    report.candidates.push_back(std::move(c));
  };

  if (m == 0) {
    push_candidate(0, {}, {}, true);
  } else {
    report.saddles = saddle_candidates(params);
    std::size_t grid = 1;
    for (std::size_t i = 0; i < m; ++i) grid *= 3;

    for (std::size_t si = 0; si < report.saddles.size(); ++si) {
      const SaddlePoint& sp = report.saddles[si];
      const std::string tag = "saddle " + std::to_string(si) + ": ";
      if (!sp.converged) {
        report.notes.push_back(tag + "Newton refinement did not reach the residual tolerance");
        continue;
      }
      if (sp.degenerate) report.notes.push_back(tag + "degenerate (singular Hessian of g)");
      if (sp.offsets.anomalous)
        report.notes.push_back(tag + "log bracket is not an integer multiple of 2 pi i");

      std::vector<int> direct(m);
      bool outside = false;
      for (std::size_t i = 0; i < m; ++i) {
        direct[i] = -sp.offsets.offsets[i];
        outside = outside || std::abs(direct[i]) > 1;
      }
      if (outside) report.notes.push_back(tag + "direct offsets leave {-1, 0, 1}");

      for (std::size_t code = 0; code < grid; ++code) {
        std::vector<int> l(m);
        std::size_t rest = code;
        for (std::size_t i = 0; i < m; ++i) {
          l[i] = static_cast<int>(rest % 3) - 1;
          rest /= 3;
        }
        const bool is_direct = l == direct;
        push_candidate(si, std::move(l), sp.lambda, is_direct);
      }
      if (outside) push_candidate(si, direct, sp.lambda, true);
    }
  }

  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& c = report.candidates[i];
    if (!report.best_match) {
      report.best_match = i;
    } else {
      // Gaps equal up to rounding (real saddles give the same R for every l) go to
      // the direct candidate.
      const auto& b = report.candidates[*report.best_match];
      const double slack = 1e-12 * std::max(1.0, b.relative_gap);
      if (c.relative_gap < b.relative_gap - slack ||
          (c.direct && !b.direct && c.relative_gap <= b.relative_gap + slack))
        report.best_match = i;
    }
    if (c.direct && (!report.direct_prediction || c.radius.value < *report.direct_prediction))
      report.direct_prediction = c.radius.value;
  }
  if (report.best_match) {
    report.relative_gap = report.candidates[*report.best_match].relative_gap;
    report.matched = report.relative_gap <= report.match_tolerance;
  }
  if (!report.matched) report.notes.push_back("no candidate within the match tolerance");
  return report;
}

}  // namespace genw
