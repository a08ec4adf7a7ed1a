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

#ifndef GENW_VERIFY_HPP_
#define GENW_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genw/params.hpp"
#include "genw/scaled_complex.hpp"

namespace genw {

struct VerifyCase {
  std::string suite;  // "chu_vandermonde", "reflection" or "fn_bruteforce"
  unsigned index = 0;
  std::string detail;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<VerifyCase> cases;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned cases_per_suite = 40;
};

/// Randomized checks of the Chu-Vandermonde and reflection identities
/// (r <= 4, k <= 8, complex parameters, relative 1e-9) and of F_n against a
/// 50-digit nested-loop sum (m <= 3, n <= 12, relative 1e-12). The same seed
/// gives the same cases.
VerifyReport run_verification(const VerifyOptions& options);

std::string verify_to_json(const VerifyReport& report);
std::string verify_to_csv(const VerifyReport& report);

struct AsymptoticsRow {
  unsigned n = 0;
  std::vector<unsigned> k;
  ScaledComplex exact;
  ScaledComplex asymptotic;
  cplx ratio{0.0, 0.0};
  double error = 0.0;  // |ratio - 1|
};

/// Exact against asymptotic a_n(k) with k_i = round(n lambda_i) for each n.
/// An empty lambda means lambda_i = 1 / (m + 1). Requires m >= 1.
std::vector<AsymptoticsRow> asymptotics_table(const ParamSet& params,
                                              std::span<const double> lambda,
                                              std::span<const unsigned> orders);

std::string asymptotics_to_json(const ParamSet& params, const std::vector<AsymptoticsRow>& rows);
std::string asymptotics_to_csv(const std::vector<AsymptoticsRow>& rows);

}  // namespace genw

#endif  // GENW_VERIFY_HPP_
