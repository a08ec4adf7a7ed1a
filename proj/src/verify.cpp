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

#include "genw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_complex.hpp>
#include <json.hpp>

#include "genw/error.hpp"
#include "genw/hyper.hpp"
#include "genw/io.hpp"
#include "genw/radius.hpp"

namespace genw {
namespace {

using nlohmann::json;
using big = boost::multiprecision::cpp_complex_50;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  // Platform-independent uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  unsigned integer(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(uniform() * static_cast<double>(hi - lo + 1));
  }
  cplx box(double half) { return {uniform(-half, half), uniform(-half, half)}; }
  cplx annulus(double r_lo, double r_hi) {
    return std::polar(uniform(r_lo, r_hi), uniform(-std::numbers::pi, std::numbers::pi));
  }

 private:
  std::mt19937_64 gen_;
};

double relative_gap(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

std::string describe(const char* name, std::span<const cplx> v) {
  std::ostringstream os;
  os << name << "=[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << format_double(v[i].real()) << ' ' << format_double(v[i].imag());
  }
  os << ']';
  return os.str();
}

big to_big(cplx z) { return big(z.real(), z.imag()); }

// F_n by nested loops over [0, n-1]^m in 50-digit arithmetic.
cplx fn_nested(unsigned n, const ParamSet& params) {
  const std::size_t m = params.size();
  std::vector<unsigned> k(m, 0);
  big total(0);
  const big nb(static_cast<double>(n));
  while (true) {
    unsigned weight = 0;
    for (unsigned v : k) weight += v;
    if (weight <= n - 1) {
      big term(1);
      for (unsigned j = 0; j < weight; ++j) term *= big(1.0 - n + j);
      for (std::size_t i = 0; i < m; ++i) {
        const big np = nb * to_big(params.exponent(i));
        const big nt = nb * to_big(params.root(i));
        for (unsigned j = 0; j < k[i]; ++j) term *= (np + big(j)) / (big(j + 1) * nt);
      }
      total += term;
    }
    std::size_t pos = 0;
    while (pos < m && ++k[pos] > n - 1) k[pos++] = 0;
    if (pos == m) break;
  }
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

void chu_vandermonde_suite(Sampler& rng, unsigned count, VerifyReport& out) {
  for (unsigned c = 0; c < count; ++c) {
    const unsigned r = rng.integer(1, 4);
    const unsigned k = rng.integer(1, 8);
    std::vector<cplx> q(r), w(r);
    for (auto& v : q) v = rng.box(2.0);
    for (auto& v : w) v = rng.annulus(0.5, 1.5);
    const std::size_t center = rng.integer(0, r - 1);
    VerifyCase vc{"chu_vandermonde", c, "", 0.0, 1e-9, false};
    vc.detail = "k=" + std::to_string(k) + " center=" + std::to_string(center) + " " +
                describe("q", q) + " " + describe("w", w);
    try {
      vc.error = relative_gap(chu_vandermonde_lhs(k, q, w), chu_vandermonde_rhs(k, q, w, center));
      vc.passed = vc.error <= vc.tolerance;
    } catch (const Error& e) {
      vc.error = std::numeric_limits<double>::quiet_NaN();
      vc.detail += std::string(" error: ") + e.what();
    }
    out.cases.push_back(std::move(vc));
  }
}

void reflection_suite(Sampler& rng, unsigned count, VerifyReport& out) {
  for (unsigned c = 0; c < count; ++c) {
    const unsigned m = rng.integer(1, 4);
    const unsigned k = rng.integer(1, 8);
    std::vector<cplx> b(m), x(m);
    for (auto& v : b) v = rng.box(2.0);
    for (auto& v : x) v = rng.box(1.0);
    const cplx cpar = rng.box(3.0);
    VerifyCase vc{"reflection", c, "", 0.0, 1e-9, false};
    vc.detail = "k=" + std::to_string(k) + " " + describe("b", b) + " c=" +
                format_double(cpar.real()) + " " + format_double(cpar.imag()) + " " +
                describe("x", x);
    try {
      const auto [lhs, rhs] = lauricella_reflection_check(k, b, cpar, x);
      vc.error = relative_gap(lhs, rhs);
      vc.passed = vc.error <= vc.tolerance;
    } catch (const Error& e) {
      vc.error = std::numeric_limits<double>::quiet_NaN();
      vc.detail += std::string(" error: ") + e.what();
    }
    out.cases.push_back(std::move(vc));
  }
}

void fn_suite(Sampler& rng, unsigned count, VerifyReport& out) {
  for (unsigned c = 0; c < count; ++c) {
    const unsigned m = rng.integer(1, 3);
    const unsigned n = rng.integer(1, 12);
    std::vector<cplx> t(m), p(m);
    for (auto& v : t) v = rng.annulus(0.5, 2.0);
    for (auto& v : p) v = rng.box(2.0);
    VerifyCase vc{"fn_bruteforce", c, "", 0.0, 1e-12, false};
    vc.detail = "n=" + std::to_string(n) + " " + describe("t", t) + " " + describe("p", p);
    try {
      const ParamSet params(t, p);
      vc.error = relative_gap(fn_coefficient(n, params).to_complex(), fn_nested(n, params));
      vc.passed = vc.error <= vc.tolerance;
    } catch (const Error& e) {
      vc.error = std::numeric_limits<double>::quiet_NaN();
      vc.detail += std::string(" error: ") + e.what();
    }
    out.cases.push_back(std::move(vc));
  }
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return !c.passed; }));
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport out;
  out.seed = options.seed;
  Sampler rng(options.seed);
  chu_vandermonde_suite(rng, options.cases_per_suite, out);
  reflection_suite(rng, options.cases_per_suite, out);
  fn_suite(rng, options.cases_per_suite, out);
  return out;
}

std::string verify_to_json(const VerifyReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    cases.push_back(json{{"suite", c.suite},
                         {"case", c.index},
                         {"error", number_or_null(c.error)},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed},
                         {"detail", c.detail}});
  }
  json doc{{"seed", report.seed},
           {"cases", cases},
           {"failures", report.failures()},
           {"passed", report.passed()}};
  return doc.dump(2);
}

std::string verify_to_csv(const VerifyReport& report) {
  std::string out = "suite,case,error,tolerance,passed,detail\n";
  for (const auto& c : report.cases) {
    out += c.suite + ',' + std::to_string(c.index) + ',' + format_double(c.error) + ',' +
           format_double(c.tolerance) + ',' + (c.passed ? "1" : "0") + ",\"" + c.detail + "\"\n";
  }
  return out;
}

std::vector<AsymptoticsRow> asymptotics_table(const ParamSet& params,
                                              std::span<const double> lambda,
                                              std::span<const unsigned> orders) {
  const std::size_t m = params.size();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "the asymptotic check needs m >= 1");
  std::vector<double> lam(lambda.begin(), lambda.end());
  if (lam.empty()) lam.assign(m, 1.0 / static_cast<double>(m + 1));
  if (lam.size() != m) throw Error(ErrorCode::kInvalidArgument, "lambda must have m entries");

  std::vector<AsymptoticsRow> rows;
  for (unsigned n : orders) {
    AsymptoticsRow row;
    row.n = n;
    for (double l : lam) {
      const double k = std::nearbyint(static_cast<double>(n) * l);
      if (!(k >= 1.0) || k > static_cast<double>(n))
        throw Error(ErrorCode::kInvalidArgument, "n * lambda_i must round into [1, n - 1]");
      row.k.push_back(static_cast<unsigned>(k));
    }
    const auto check = coefficient_asymptotic_check(n, MultiIndex(row.k), params);
    row.exact = check.exact;
    row.asymptotic = check.asymptotic;
    row.ratio = check.ratio();
    row.error = std::abs(row.ratio - 1.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string asymptotics_to_json(const ParamSet& params, const std::vector<AsymptoticsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"n", r.n},
                       {"k", r.k},
                       {"log_abs_exact", number_or_null(r.exact.log_abs())},
                       {"log_abs_asymptotic", number_or_null(r.asymptotic.log_abs())},
                       {"ratio", {r.ratio.real(), r.ratio.imag()}},
                       {"error", number_or_null(r.error)}});
  }
  json doc{{"params", json::parse(params_to_json(params))}, {"rows", out}};
  return doc.dump(2);
}

std::string asymptotics_to_csv(const std::vector<AsymptoticsRow>& rows) {
  std::string out = "n,k,log_abs_exact,log_abs_asymptotic,re_ratio,im_ratio,error\n";
  for (const auto& r : rows) {
    std::string k;
    for (std::size_t i = 0; i < r.k.size(); ++i) k += (i ? ";" : "") + std::to_string(r.k[i]);
    out += std::to_string(r.n) + ',' + k + ',' + format_double(r.exact.log_abs()) + ',' +
           format_double(r.asymptotic.log_abs()) + ',' + format_double(r.ratio.real()) + ',' +
           format_double(r.ratio.imag()) + ',' + format_double(r.error) + '\n';
  }
  return out;
}

}  // namespace genw
