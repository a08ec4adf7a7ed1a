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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "genw/error.hpp"
#include "genw/radius.hpp"
#include "genw/series.hpp"
#include "oracles.hpp"

namespace {

using genw::cplx;
constexpr double kPi = std::numbers::pi;

const genw::ParamSet& two_root_params() {
  static const genw::ParamSet ps({cplx(-1.0, 1.0)}, {cplx(-1.0, 1.0)});
  return ps;
}

const genw::ParamSet& unit_params() {
  static const genw::ParamSet ps({1.0}, {1.0});
  return ps;
}

const genw::CoefficientTable& table300(const genw::ParamSet& ps) {
  static std::map<const genw::ParamSet*, genw::CoefficientTable> cache;
  auto it = cache.find(&ps);
  if (it == cache.end()) it = cache.emplace(&ps, genw::build_table(ps, 300)).first;
  return it->second;
}

double ratio_error(const genw::ScaledComplex& exact, const genw::ScaledComplex& approx) {
  return std::abs(genw::ratio(exact, approx) - 1.0);
}

TEST(PsiFactor, CaseSplit) {
  EXPECT_EQ(genw::psi_factor(5, 0.5, 1.0), cplx(1.0));
  EXPECT_EQ(genw::psi_factor(5, 0.5, cplx(-0.25, 0.1)), cplx(1.0));
  EXPECT_EQ(genw::psi_factor(5, 0.1, -0.25), cplx(1.0));  // p + lambda < 0
  // -2i sin(-pi/2) e^{-i pi/2} = 2
  const cplx v = genw::psi_factor(2, 0.5, -0.25);
  EXPECT_NEAR(v.real(), 2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_EQ(genw::psi_factor(4, 0.5, -0.25), cplx(0.0));
}

TEST(PsiFactor, SignMatchesExactProduct) {
  // For p < 0 < p + lambda the product (np)_k / k! changes sign with n;
  // psi must follow it.
  for (unsigned n : {7u, 10u, 13u, 22u}) {
    const double p = -0.2537;
    const auto approx = genw::pochhammer_ratio_asymptotic(n * 10, 0.5, p);
    const auto exact = genw::pochhammer_ratio_exact(n * 10, approx.k, p);
    EXPECT_GT(genw::ratio(exact, approx.value).real(), 0.0) << n;
  }
}

TEST(PochhammerAsymptotic, GammaCases) {
  struct Case {
    unsigned n;
    double lambda;
    double p;
    double tol;
  };
  for (const Case c : {Case{200, 0.5, 1.0, 0.01}, Case{100, 1.0, 2.0, 0.01},
                       Case{200, 0.5, -0.2537, 0.02}, Case{200, 0.5, -0.7537, 0.01}}) {
    const auto approx = genw::pochhammer_ratio_asymptotic(c.n, c.lambda, c.p);
    EXPECT_EQ(approx.k, static_cast<unsigned>(std::lround(c.n * c.lambda)));
    const auto exact = genw::pochhammer_ratio_exact(c.n, approx.k, c.p);
    EXPECT_LE(ratio_error(exact, approx.value), c.tol) << c.p;
    // Independent magnitude check from a factor-by-factor log sum.
    const auto log_exact = oracle::log_pochhammer_ratio(c.n, c.p, approx.k);
    EXPECT_NEAR(exact.log_abs(), static_cast<double>(log_exact.real()), 1e-9);
  }
}

TEST(PochhammerAsymptotic, RecordsRoundingAndRejectsDegenerate) {
  const auto a = genw::pochhammer_ratio_asymptotic(7, 0.3, 1.0);
  EXPECT_EQ(a.k, 2u);
  EXPECT_DOUBLE_EQ(a.lambda, 2.0 / 7.0);
  EXPECT_THROW(genw::pochhammer_ratio_asymptotic(10, 0.5, -0.5), genw::Error);
}

TEST(ShiftedPochhammer, AsymptoticWithinOnePercent) {
  double previous = INFINITY;
  for (unsigned n : {100u, 200u, 400u}) {
    const auto approx = genw::shifted_pochhammer_asymptotic(n, 0.4);
    const double err = ratio_error(genw::shifted_pochhammer_exact(n, approx.k), approx.value);
    if (n == 200) {
      EXPECT_LE(err, 0.01);
    }
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(ExponentG, TrivialValues) {
  EXPECT_EQ(genw::exponent_g({}, genw::ParamSet()), cplx(0.0));
  const genw::ParamSet ps({cplx(0.4, 2.0), -3.0}, {cplx(-1.5, 0.5), 2.0});
  const std::vector<cplx> zero(2, 0.0);
  EXPECT_LE(std::abs(genw::exponent_g(zero, ps)), 1e-15);
}

TEST(ExponentG, GrowthRateOfFn) {
  // e^{Re g(phi)} at phi = 1 + i against the measured limsup |F_n|^{1/n}.
  const std::vector<cplx> phi{cplx(1.0, 1.0)};
  const double predicted = std::exp(genw::exponent_g(phi, two_root_params()).real());
  const auto& table = table300(two_root_params());
  std::vector<double> u;
  for (unsigned n = 150; n <= 300; ++n) u.push_back(table.scaled_f_value(n).log_abs());
  // Least squares of log|F_n| on (1, n, log n).
  double s[3][3] = {}, r[3] = {};
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double n = 150.0 + i;
    const double x[3] = {1.0, n, std::log(n)};
    for (int a = 0; a < 3; ++a) {
      r[a] += x[a] * u[i];
      for (int b = 0; b < 3; ++b) s[a][b] += x[a] * x[b];
    }
  }
  // Cramer's rule for the slope.
  auto det = [](double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  double sb[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sb[a][b] = b == 1 ? r[a] : s[a][b];
  const double measured = std::exp(det(sb) / det(s));
  EXPECT_LE(std::abs(measured / predicted - 1.0), 0.05) << measured << " vs " << predicted;
}

TEST(Amplitude, Examples) {
  EXPECT_EQ(genw::amplitude({}, genw::ParamSet()), cplx(1.0));
  const std::vector<cplx> half{0.5};
  const cplx got = genw::amplitude(half, genw::ParamSet({1.0}, {0.5}));
  EXPECT_NEAR(got.real(), std::sqrt(0.5) * std::sqrt(1.0 / (2.0 * kPi)), 1e-15);
  EXPECT_THROW(genw::amplitude(std::vector<cplx>{0.0}, unit_params()), genw::Error);
  EXPECT_THROW(genw::amplitude(std::vector<cplx>{-1.0}, unit_params()), genw::Error);
}

TEST(Amplitude, MatchesTheNFreeFactor) {
  for (double t : {1.0, -3.0, 2.5}) {
    const genw::ParamSet ps({t}, {1.5});
    const unsigned n = 200;
    const genw::MultiIndex k({60});
    const std::vector<cplx> lambda{0.3};
    const auto check = genw::coefficient_asymptotic_check(n, k, ps);
    const genw::ScaledComplex n_free =
        check.exact * genw::ScaledComplex(std::sqrt(static_cast<double>(n))) /
        genw::ScaledComplex::from_log(static_cast<double>(n) * genw::exponent_g(lambda, ps));
    EXPECT_LE(std::abs(n_free.to_complex() / genw::amplitude(lambda, ps) - 1.0), 0.02) << t;
  }
}

TEST(CoefficientAsymptotic, Examples) {
  const auto c100 = genw::coefficient_asymptotic_check(100, genw::MultiIndex({50}), unit_params());
  const double e100 = std::abs(c100.ratio() - 1.0);
  EXPECT_LE(e100, 0.02);
  const auto c200 = genw::coefficient_asymptotic_check(200, genw::MultiIndex({100}), unit_params());
  const double e200 = std::abs(c200.ratio() - 1.0);
  EXPECT_LT(e200, 0.7 * e100);
  EXPECT_GT(e200, 0.3 * e100);

  const genw::ParamSet two({1.0, -1.0}, {1.0, 2.0});
  const auto c2 = genw::coefficient_asymptotic_check(120, genw::MultiIndex({40, 40}), two);
  EXPECT_LE(std::abs(c2.ratio() - 1.0), 0.05);

  EXPECT_THROW(genw::coefficient_asymptotic_check(100, genw::MultiIndex({0}), unit_params()),
               genw::Error);
  EXPECT_THROW(genw::coefficient_asymptotic_check(10, genw::MultiIndex({10}), unit_params()),
               genw::Error);
}

TEST(CoefficientAsymptotic, ErrorShrinksWithN) {
  const genw::ParamSet ps({cplx(0.5, 1.5)}, {cplx(0.8, -0.3)});
  double previous = INFINITY;
  for (unsigned n : {50u, 100u, 200u, 400u}) {
    const auto c = genw::coefficient_asymptotic_check(n, genw::MultiIndex({n / 2}), ps);
    const double err = std::abs(c.ratio() - 1.0);
    EXPECT_LT(err, previous) << n;
    previous = err;
  }
}

TEST(Saddles, TwoRootExample) {
  const auto saddles = genw::saddle_candidates(two_root_params());
  ASSERT_EQ(saddles.size(), 2u);
  std::vector<cplx> found{saddles[0].lambda[0], saddles[1].lambda[0]};
  std::sort(found.begin(), found.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  EXPECT_LE(std::abs(found[0] - cplx(0.0, -1.0)), 1e-12);
  EXPECT_LE(std::abs(found[1] - cplx(1.0, 1.0)), 1e-12);
  for (const auto& sp : saddles) {
    EXPECT_TRUE(sp.converged);
    EXPECT_LE(std::abs(sp.s - (1.0 - sp.lambda[0])), 1e-15);
    EXPECT_FALSE(sp.offsets.anomalous);
    if (std::abs(sp.lambda[0] - cplx(1.0, 1.0)) < 1e-9)
      EXPECT_EQ(sp.offsets.offsets[0], 0);
    else
      EXPECT_NE(sp.offsets.offsets[0], 0);
  }
  EXPECT_THROW(genw::saddle_candidates(genw::ParamSet()), genw::Error);
}

TEST(Saddles, QuadraticHasTwoCandidates) {
  oracle::Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const genw::ParamSet ps({rng.annulus(0.3, 3.0)}, {rng.box(2.0)});
    EXPECT_EQ(genw::saddle_candidates(ps).size(), 2u);
  }
}

TEST(Saddles, ResidualsAndIntegralOffsetsOnRandomParams) {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned m = rng.integer(1, 3);
    std::vector<cplx> t(m), p(m);
    for (auto& v : t) v = rng.annulus(0.3, 3.0);
    for (auto& v : p) v = rng.box(2.0);
    const genw::ParamSet ps(t, p);
    const auto saddles = genw::saddle_candidates(ps);
    EXPECT_EQ(saddles.size(), m + 1) << trial;
    for (const auto& sp : saddles) {
      ASSERT_TRUE(sp.converged);
      // Recompute the residuals rather than trusting the stored ones.
      cplx sum(0.0);
      for (cplx l : sp.lambda) sum += l;
      for (std::size_t i = 0; i < m; ++i) {
        const cplx r = (1.0 - sum) * (p[i] + sp.lambda[i]) + t[i] * sp.lambda[i];
        EXPECT_LE(std::abs(r), 1e-10);
        const cplx bracket = std::log(1.0 - sum) + std::log(p[i] + sp.lambda[i]) -
                             std::log(-t[i] * sp.lambda[i]);
        const double turns = bracket.imag() / (2.0 * kPi);
        EXPECT_LE(std::abs(turns - std::round(turns)), 1e-6);
        EXPECT_LE(std::abs(bracket.real()), 1e-8);
        EXPECT_EQ(sp.offsets.offsets[i], static_cast<int>(std::lround(turns)));
      }
      std::vector<int> direct;
      for (int l : sp.offsets.offsets) direct.push_back(-l);
      const auto r = genw::conjectured_radius(sp.lambda, direct, ps);
      EXPECT_TRUE(r.consistent) << r.route_gap;
      EXPECT_GT(r.value, 0.0);
    }
  }
}

TEST(LogBranchOffsets, RealInteriorSaddleHasZeroOffset) {
  // p = 1, t = -2: s^2 - 4 s + 2 = 0 gives lambda = 0.414... in (0, 1).
  const genw::ParamSet ps({-2.0}, {1.0});
  bool seen = false;
  for (const auto& sp : genw::saddle_candidates(ps)) {
    const cplx l = sp.lambda[0];
    if (l.real() > 0.0 && l.real() < 1.0 && std::abs(l.imag()) < 1e-12) {
      seen = true;
      EXPECT_NEAR(l.real(), std::sqrt(2.0) - 1.0, 1e-14);
      EXPECT_EQ(sp.offsets.offsets[0], 0);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(ConjecturedRadius, ClassicalCase) {
  const auto r = genw::conjectured_radius({}, {}, genw::ParamSet());
  EXPECT_NEAR(r.value, std::exp(-1.0), 1e-16);
  EXPECT_TRUE(r.consistent);
  EXPECT_THROW(genw::conjectured_radius(std::vector<cplx>{1.0}, {}, unit_params()), genw::Error);
}

TEST(ConjecturedRadius, UnitParametersAgainstEmpirical) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const auto r = genw::conjectured_radius(std::vector<cplx>{golden}, std::vector<int>{0}, unit_params());
  const double emp = genw::empirical_radius(table300(unit_params()), 150, 300);
  EXPECT_LE(std::abs(r.value - emp) / emp, 0.02) << r.value << " vs " << emp;
}

TEST(ConjecturedRadius, TwoRootExampleAgainstEmpirical) {
  const auto r = genw::conjectured_radius(std::vector<cplx>{cplx(1.0, 1.0)}, std::vector<int>{0},
                                          two_root_params());
  const double emp = genw::empirical_radius(table300(two_root_params()), 150, 300);
  EXPECT_LE(std::abs(r.value - emp) / emp, 0.05) << r.value << " vs " << emp;
  EXPECT_TRUE(r.consistent);
}

TEST(EmpiricalRadius, Classical) {
  const auto table = genw::build_table(genw::ParamSet(), 400);
  EXPECT_LE(std::abs(genw::empirical_radius(table, 100, 200) * std::numbers::e - 1.0), 0.01);
  // Plain root test |c_N|^{-1/N}: the error falls as N grows.
  auto root_test = [&](unsigned n) { return std::exp(-table.scaled_coefficient(n).log_abs() / n); };
  EXPECT_LT(std::abs(root_test(400) * std::numbers::e - 1.0),
            std::abs(root_test(100) * std::numbers::e - 1.0));
  const auto small = genw::build_table(genw::ParamSet(), 100);
  EXPECT_LT(std::abs(genw::empirical_radius(table, 200, 400) * std::numbers::e - 1.0),
            std::abs(genw::empirical_radius(small, 50, 100) * std::numbers::e - 1.0));
}

TEST(EmpiricalRadius, FartherRootGivesLargerRadius) {
  const double near = genw::empirical_radius(genw::build_table(genw::ParamSet({1.0}, {1.0}), 200), 100, 200);
  const double far = genw::empirical_radius(genw::build_table(genw::ParamSet({10.0}, {1.0}), 200), 100, 200);
  EXPECT_GT(far, near);
}

TEST(EmpiricalRadius, EnvelopeDominatesPlainFit) {
  const genw::ParamSet ps({cplx(-1.0, 0.5)}, {-0.75});
  const auto table = genw::build_table(ps, 200);
  genw::EmpiricalOptions plain{100, 200, false, true};
  genw::EmpiricalOptions envelope{100, 200, true, true};
  EXPECT_GE(1.0 / genw::empirical_radius(table, envelope),
            1.0 / genw::empirical_radius(table, plain) - 1e-12);
}

TEST(EmpiricalRadius, RejectsBadWindows) {
  const auto table = genw::build_table(genw::ParamSet(), 50);
  EXPECT_THROW(genw::empirical_radius(table, 10, 60), genw::Error);
  EXPECT_THROW(genw::empirical_radius(table, 30, 30), genw::Error);
  EXPECT_THROW(genw::empirical_radius(table, 0, 20), genw::Error);
}

TEST(RadiusReport, Classical) {
  const auto report = genw::radius_report(genw::ParamSet(), 300);
  ASSERT_EQ(report.candidates.size(), 1u);
  EXPECT_NEAR(report.candidates[0].radius.value, std::exp(-1.0), 1e-16);
  EXPECT_LT(report.relative_gap, 0.01);
  EXPECT_TRUE(report.matched);
  EXPECT_THROW(genw::radius_report(genw::ParamSet(), 49), genw::Error);
}

TEST(RadiusReport, TwoRootExample) {
  const auto report = genw::radius_report(table300(two_root_params()));
  EXPECT_EQ(report.saddles.size(), 2u);
  EXPECT_EQ(report.candidates.size(), 6u);
  ASSERT_TRUE(report.best_match.has_value());
  EXPECT_TRUE(report.matched);
  EXPECT_LT(report.relative_gap, 0.05);
  const auto& best = report.candidates[*report.best_match];
  EXPECT_LE(std::abs(report.saddles[best.saddle].lambda[0] - cplx(1.0, 1.0)), 1e-12);
  for (const auto& c : report.candidates) {
    EXPECT_GT(c.radius.value, 0.0);
    EXPECT_NEAR(c.relative_gap, std::abs(c.radius.value - report.empirical) / report.empirical, 1e-15);
  }
  ASSERT_TRUE(report.direct_prediction.has_value());
  EXPECT_LE(std::abs(*report.direct_prediction - report.empirical) / report.empirical, 0.05);
}

TEST(RadiusReport, TwoRootSmoke) {
  const auto report = genw::radius_report(genw::ParamSet({1.0, -2.0}, {1.0, 1.0}), 120);
  EXPECT_EQ(report.saddles.size(), 3u);
  EXPECT_EQ(report.candidates.size(), 27u);
  EXPECT_TRUE(report.best_match.has_value());
  EXPECT_TRUE(std::isfinite(report.relative_gap));
}

}  // namespace
