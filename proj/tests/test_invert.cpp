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

#include <cmath>
#include <numbers>
#include <vector>

#include "genw/error.hpp"
#include "genw/invert.hpp"
#include "genw/radius.hpp"
#include "genw/series.hpp"
#include "oracles.hpp"

namespace {

using genw::cplx;

genw::ParamSet random_params(oracle::Rng& rng, unsigned m) {
  std::vector<cplx> t, p;
  while (t.size() < m) {
    const cplx c = rng.annulus(0.6, 2.0);
    if (std::abs(std::arg(c)) < std::numbers::pi / 6) continue;
    t.push_back(c);
    p.push_back(rng.box(1.5));
  }
  return genw::ParamSet(t, p);
}

TEST(NewtonInvert, Examples) {
  const genw::ParamSet none;
  const auto zero = genw::newton_invert(0.0, 0.1, none, 1e-14);
  EXPECT_TRUE(zero.converged);
  EXPECT_LE(std::abs(zero.z), 1e-14);

  const auto one = genw::newton_invert(std::numbers::e, 0.9, none, 1e-14);
  EXPECT_TRUE(one.converged);
  EXPECT_LE(std::abs(one.z - 1.0), 1e-12);
  EXPECT_EQ(one.method, genw::InversionMethod::kNewtonPolished);
}

TEST(NewtonInvert, ResidualFieldIsRecomputable) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ps = random_params(rng, rng.integer(1, 3));
    const cplx z_star = 0.2 * rng.annulus(0.1, 1.0);
    const cplx w = genw::forward_map(z_star, ps);
    const auto r = genw::newton_invert(w, z_star + cplx(0.01, 0.0), ps, 1e-14);
    EXPECT_TRUE(r.converged) << trial;
    EXPECT_LE(std::abs(r.z - z_star), 1e-10 * std::max(1.0, std::abs(z_star)));
    EXPECT_EQ(r.residual, std::abs(genw::forward_map(r.z, ps) - w));
  }
}

TEST(NewtonInvert, FlagsInsteadOfThrowing) {
  const genw::ParamSet ps({cplx(1.0, 1.0)}, {0.5});
  const auto r = genw::newton_invert(cplx(1e6, 0.0), cplx(0.1, 0.0), ps, 1e-300, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(std::isfinite(r.residual));
  EXPECT_THROW(genw::newton_invert(1.0, 0.1, ps, 0.0), genw::Error);
}

TEST(NewtonInvert, DetectsCrossingABranchCut) {
  // With t = 1 the cut of (z - 1)^{1/2} is the real ray z < 1.
  const genw::ParamSet ps({1.0}, {0.5});
  const cplx target(0.2, -0.01);
  const cplx w = genw::forward_map(target, ps);

  // This start reaches the target only by stepping over the cut.
  const auto crossing = genw::newton_invert(w, cplx(0.5, 0.05), ps, 1e-13);
  EXPECT_TRUE(crossing.converged);
  EXPECT_LE(std::abs(crossing.z - target), 1e-12);
  EXPECT_TRUE(crossing.branch_crossed);

  // From just above the cut Newton settles on a different preimage of w in the
  // upper half plane without ever crossing.
  const auto other = genw::newton_invert(w, cplx(0.2, 0.01), ps, 1e-13);
  EXPECT_TRUE(other.converged);
  EXPECT_GT(other.z.imag(), 0.0);
  EXPECT_LE(std::abs(genw::forward_map(other.z, ps) - w), 1e-13);
  EXPECT_FALSE(other.branch_crossed);

  const auto clean = genw::newton_invert(w, target + cplx(0.001, -0.001), ps, 1e-13);
  EXPECT_FALSE(clean.branch_crossed);
  EXPECT_TRUE(clean.converged);
}

TEST(GeneralizedW, ZeroAndClassical) {
  const auto classical = genw::build_table(genw::ParamSet(), 40);
  const auto zero = genw::generalized_w(0.0, classical, 1e-14);
  EXPECT_EQ(zero.z, cplx(0.0));
  EXPECT_EQ(zero.method, genw::InversionMethod::kSeriesOnly);

  const auto w02 = genw::generalized_w(0.2, classical, 1e-15);
  EXPECT_LE(std::abs(w02.z - oracle::lambert_w(0.2)), 1e-14);
  const cplx seed = genw::evaluate_series(0.2, classical, genw::seed_terms(0.2, classical));
  EXPECT_LE(std::abs(seed - w02.z), 1e-10);
}

TEST(GeneralizedW, LaguerreCase) {
  // p = (1, -1): the two-parameter W(t; s) family.
  const genw::ParamSet ps({cplx(1.5, 0.5), cplx(-2.0, 0.7)}, {1.0, -1.0});
  const auto table = genw::build_table(ps, 40);
  for (const cplx w : {cplx(0.01, 0.0), cplx(-0.02, 0.01), cplx(0.0, 0.03)}) {
    const cplx series = genw::evaluate_series(w, table);
    const auto newton = genw::newton_invert(w, 0.0, ps, 1e-15);
    EXPECT_LE(std::abs(series - newton.z), 1e-8);
    EXPECT_LE(std::abs(genw::generalized_w(w, table, 1e-15).z - newton.z), 1e-12);
  }
}

TEST(GeneralizedW, InvertsTheForwardMapNearZero) {
  oracle::Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    const auto ps = random_params(rng, 1 + trial % 3);
    const auto table = genw::build_table(ps, 40);
    for (int k = 0; k < 6; ++k) {
      const cplx z = 0.05 * rng.annulus(0.0, 1.0);
      const auto r = genw::generalized_w(genw::forward_map(z, ps), table, 1e-15);
      EXPECT_LE(std::abs(r.z - z), 1e-12) << trial << ' ' << k;
    }
  }
}

TEST(GeneralizedW, HalfRadiusResiduals) {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 4; ++trial) {
    const auto ps = random_params(rng, 1 + trial % 2);
    const auto table = genw::build_table(ps, 120);
    const double r_emp = genw::empirical_radius(table, 60, 120);
    for (int k = 0; k < 10; ++k) {
      const cplx w = 0.5 * r_emp * rng.annulus(0.0, 1.0);
      const auto r = genw::generalized_w(w, table, 1e-14);
      EXPECT_LE(std::abs(genw::forward_map(r.z, ps) - w), 1e-9);
      EXPECT_FALSE(r.branch_crossed);
    }
  }
}

TEST(GeneralizedW, MoreTermsNeverCostMoreIterationsOnAverage) {
  oracle::Rng rng(29);
  const auto ps = random_params(rng, 2);
  const auto table = genw::build_table(ps, 40);
  const double r_emp = genw::empirical_radius(table, 20, 40);
  double previous = INFINITY;
  for (unsigned n_terms : {1u, 3u, 6u, 12u, 24u}) {
    double total = 0.0;
    oracle::Rng sample(31);
    for (int k = 0; k < 20; ++k) {
      const cplx w = 0.4 * r_emp * sample.annulus(0.2, 1.0);
      total += genw::generalized_w(w, table, 1e-14, 100, n_terms).iterations;
    }
    EXPECT_LE(total, previous) << n_terms;
    previous = total;
  }
}

}  // namespace
