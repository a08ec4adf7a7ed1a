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
#include <cstring>
#include <string>

#include "genw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  genw_string_free(s);
  return out;
}

TEST(CApi, ParamsLifecycleAndErrors) {
  const genw_complex t[] = {{-1.0, 1.0}}, p[] = {{-1.0, 1.0}};
  genw_params* params = nullptr;
  ASSERT_EQ(genw_params_create(t, p, 1, &params), GENW_OK);
  EXPECT_EQ(genw_params_size(params), 1u);
  char* js = nullptr;
  ASSERT_EQ(genw_params_to_json(params, &js), GENW_OK);
  genw_params* again = nullptr;
  ASSERT_EQ(genw_params_from_json(js, &again), GENW_OK);
  genw_string_free(js);
  EXPECT_EQ(genw_params_size(again), 1u);
  genw_params_destroy(again);
  genw_params_destroy(params);

  const genw_complex zero[] = {{0.0, 0.0}};
  genw_params* bad = nullptr;
  EXPECT_EQ(genw_params_create(zero, p, 1, &bad), GENW_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_STRNE(genw_last_error(), "");
  EXPECT_EQ(genw_params_from_json("{\"t\": [1]}", &bad), GENW_PARSE);
  EXPECT_NE(std::strstr(genw_last_error(), "\"p\""), nullptr);
  EXPECT_EQ(genw_params_create(nullptr, nullptr, 0, &bad), GENW_OK);
  EXPECT_STREQ(genw_last_error(), "");
  genw_params_destroy(bad);
  EXPECT_STREQ(genw_status_string(GENW_PARSE), "parse error");
}

TEST(CApi, ForwardMapDomainError) {
  const genw_complex t[] = {{1.0, 1.0}}, p[] = {{0.5, 0.0}};
  genw_params* params = nullptr;
  ASSERT_EQ(genw_params_create(t, p, 1, &params), GENW_OK);
  genw_complex out{};
  EXPECT_EQ(genw_forward_map(params, {1.0, 1.0}, &out), GENW_DOMAIN);
  EXPECT_EQ(genw_forward_map(params, {0.0, 0.0}, &out), GENW_OK);
  EXPECT_EQ(out.re, 0.0);
  genw_params_destroy(params);
}

TEST(CApi, TableSeriesAndInversion) {
  genw_params* params = nullptr;
  ASSERT_EQ(genw_params_create(nullptr, nullptr, 0, &params), GENW_OK);
  genw_table* table = nullptr;
  ASSERT_EQ(genw_table_build(params, 30, 1, &table), GENW_OK);
  EXPECT_EQ(genw_table_order(table), 30u);

  genw_complex c{};
  ASSERT_EQ(genw_table_coefficient(table, 3, &c), GENW_OK);
  EXPECT_EQ(c.re, 1.5);
  EXPECT_EQ(genw_table_coefficient(table, 31, &c), GENW_INVALID_ARGUMENT);
  genw_complex mant{};
  int64_t exp2 = 0;
  ASSERT_EQ(genw_table_coefficient_scaled(table, 4, &mant, &exp2), GENW_OK);
  EXPECT_EQ(std::ldexp(mant.re, static_cast<int>(exp2)), -8.0 / 3.0);

  char* csv = nullptr;
  ASSERT_EQ(genw_table_export(table, GENW_FORMAT_CSV, &csv), GENW_OK);
  EXPECT_EQ(take(csv).rfind("n,re_c,im_c,re_F,im_F\n1,1,0,1,0\n", 0), 0u);

  genw_complex z{};
  ASSERT_EQ(genw_evaluate_series(table, {0.1, 0.0}, 0, &z), GENW_OK);
  EXPECT_NEAR(z.re, 0.091276527160862264, 1e-15);

  genw_inversion inv{};
  ASSERT_EQ(genw_generalized_w(table, {std::exp(1.0), 0.0}, 1e-14, 100, &inv), GENW_OK);
  EXPECT_NEAR(inv.z.re, 1.0, 1e-13);
  EXPECT_TRUE(inv.converged);
  ASSERT_EQ(genw_newton_invert(params, {std::exp(1.0), 0.0}, {0.9, 0.0}, 1e-14, 50, &inv), GENW_OK);
  EXPECT_NEAR(inv.z.re, 1.0, 1e-13);
  EXPECT_EQ(genw_newton_invert(params, {1.0, 0.0}, {0.9, 0.0}, -1.0, 50, &inv),
            GENW_INVALID_ARGUMENT);

  double r = 0.0;
  ASSERT_EQ(genw_empirical_radius(table, 15, 30, 1, 1, &r), GENW_OK);
  EXPECT_NEAR(r * std::exp(1.0), 1.0, 0.01);

  genw_table_destroy(table);
  genw_params_destroy(params);
}

TEST(CApi, RadiusReport) {
  const genw_complex t[] = {{-1.0, 1.0}}, p[] = {{-1.0, 1.0}};
  genw_params* params = nullptr;
  ASSERT_EQ(genw_params_create(t, p, 1, &params), GENW_OK);
  genw_radius_report* report = nullptr;
  EXPECT_EQ(genw_radius_report_create(params, 20, &report), GENW_INVALID_ARGUMENT);
  ASSERT_EQ(genw_radius_report_create(params, 80, &report), GENW_OK);
  ASSERT_EQ(genw_radius_report_saddle_count(report), 2u);
  bool minus_i = false, one_plus_i = false;
  for (size_t i = 0; i < 2; ++i) {
    genw_complex lambda{};
    ASSERT_EQ(genw_radius_report_saddle(report, i, &lambda), GENW_OK);
    minus_i = minus_i || std::hypot(lambda.re, lambda.im + 1.0) < 1e-12;
    one_plus_i = one_plus_i || std::hypot(lambda.re - 1.0, lambda.im - 1.0) < 1e-12;
  }
  EXPECT_TRUE(minus_i);
  EXPECT_TRUE(one_plus_i);
  EXPECT_GT(genw_radius_report_empirical(report), 0.0);
  EXPECT_NEAR(genw_radius_report_best(report), 1.0, 1e-12);
  EXPECT_NEAR(genw_radius_report_relative_gap(report),
              std::abs(genw_radius_report_best(report) - genw_radius_report_empirical(report)) /
                  genw_radius_report_empirical(report),
              1e-15);
  char* s = nullptr;
  ASSERT_EQ(genw_radius_report_export(report, GENW_FORMAT_JSON, &s), GENW_OK);
  EXPECT_NE(take(s).find("\"conjectured\""), std::string::npos);
  ASSERT_EQ(genw_radius_report_plot_csv(report, &s), GENW_OK);
  EXPECT_EQ(take(s).rfind("n,log_abs_c,n_log_inv_R\n", 0), 0u);
  genw_radius_report_destroy(report);
  genw_params_destroy(params);
}

TEST(CApi, VerifyAndAsymptotics) {
  char* s = nullptr;
  int passed = 0;
  ASSERT_EQ(genw_verify(5, GENW_FORMAT_CSV, &s, &passed), GENW_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(take(s).rfind("suite,case,error,tolerance,passed,detail\n", 0), 0u);

  const genw_complex t[] = {{1.0, 0.0}}, p[] = {{1.0, 0.0}};
  genw_params* params = nullptr;
  ASSERT_EQ(genw_params_create(t, p, 1, &params), GENW_OK);
  const unsigned orders[] = {50, 100};
  ASSERT_EQ(genw_asymptotics(params, nullptr, 0, orders, 2, GENW_FORMAT_JSON, &s), GENW_OK);
  EXPECT_NE(take(s).find("\"rows\""), std::string::npos);
  EXPECT_EQ(genw_asymptotics(params, nullptr, 0, orders, 0, GENW_FORMAT_JSON, &s),
            GENW_INVALID_ARGUMENT);
  genw_params_destroy(params);
}

}  // namespace
