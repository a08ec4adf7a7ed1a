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

#include "genw/series.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "genw/error.hpp"
#include "genw/hyper.hpp"

namespace genw {
namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ParamSet::ParamSet(std::vector<cplx> roots, std::vector<cplx> exponents)
    : roots_(std::move(roots)), exponents_(std::move(exponents)) {
  if (roots_.size() != exponents_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ParamSet: t and p must have the same length");
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const std::string idx = "[" + std::to_string(i) + "]";
    if (!finite(roots_[i]) || !finite(exponents_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "ParamSet: non-finite entry at " + idx);
    }
    if (roots_[i] == cplx(0.0, 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "ParamSet: t" + idx + " must be nonzero");
    }
    if (exponents_[i] == cplx(0.0, 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "ParamSet: p" + idx + " must be nonzero");
    }
  }
}

cplx forward_map_over_z(cplx z, const ParamSet& params) {
  cplx value = std::exp(z);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const cplx base = z - params.root(i);
    if (base == cplx(0.0, 0.0) &&
        !(is_integer_valued(params.exponent(i)) && params.exponent(i).real() > 0.0)) {
      throw Error(ErrorCode::kDomain, "forward_map: z coincides with branch point t[" +
                                          std::to_string(i) + "]");
    }
    value *= principal_pow(base, params.exponent(i));
  }
  return value;
}

cplx forward_map(cplx z, const ParamSet& params) { return z * forward_map_over_z(z, params); }

cplx NormalFormTransform::to_standard_argument(cplx y) const {
  return argument_scale * principal_pow(y, root_power);
}

NormalFormTransform normalize_general_form(cplx t0, cplx p0, const ParamSet& params) {
  if (p0 == cplx(0.0, 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "normalize_general_form: p0 must be nonzero");
  }
  std::vector<cplx> t;
  std::vector<cplx> p;
  cplx psum(0.0, 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params.root(i) == t0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "normalize_general_form: t[" + std::to_string(i) + "] coincides with t0");
    }
    t.push_back((params.root(i) - t0) / p0);
    p.push_back(params.exponent(i) / p0);
    psum += params.exponent(i);
  }
  // y^{1/p0} = p0^{1 + sum p_i/p0} e^{t0/p0} * w prod (w - t_i')^{p_i'} e^w
  NormalFormTransform out;
  out.params_out = ParamSet(std::move(t), std::move(p));
  out.root_power = 1.0 / p0;
  out.argument_scale = std::exp(-(1.0 + psum / p0) * principal_log(p0) - t0 / p0);
  out.variable_scale = p0;
  out.variable_shift = t0;
  return out;
}

cplx general_form_map(cplx z, cplx t0, cplx p0, const ParamSet& params) {
  return principal_pow(z - t0, p0) * forward_map_over_z(z, params);
}

ScaledComplex taylor_coefficient(unsigned n, const ParamSet& params) {
  return detail::coefficient_pair(n, params).coefficient;
}

CoefficientTable::CoefficientTable(ParamSet params, std::vector<ScaledComplex> coefficients,
                                   std::vector<ScaledComplex> f_values)
    : params_(std::move(params)),
      coefficients_(std::move(coefficients)),
      f_values_(std::move(f_values)) {
  if (coefficients_.size() != f_values_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "CoefficientTable: size mismatch");
  }
}

CoefficientTable build_table(const ParamSet& params, unsigned order, unsigned threads) {
  if (order == 0) throw Error(ErrorCode::kInvalidArgument, "build_table: order must be at least 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, order);

  std::vector<ScaledComplex> c(order);
  std::vector<ScaledComplex> f(order);
  // Interleaved assignment; each worker reuses its previous precision as a hint.
  auto work = [&](unsigned first) {
    long hint = 0;
    for (unsigned n = first; n <= order; n += threads) {
      auto pair = detail::coefficient_pair(n, params, hint);
      c[n - 1] = pair.coefficient;
      f[n - 1] = pair.f_value;
      hint = pair.precision_bits;
    }
  };
  if (threads == 1) {
    work(1);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w + 1);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return CoefficientTable(params, std::move(c), std::move(f));
}

cplx evaluate_series(cplx x, const CoefficientTable& table, unsigned n_terms) {
  if (n_terms == 0 || n_terms > table.order()) {
    throw Error(ErrorCode::kInvalidArgument, "evaluate_series: n_terms must be in [1, table order]");
  }
  const ScaledComplex sx(x);
  ScaledComplex acc = table.scaled_coefficient(n_terms);
  for (unsigned n = n_terms - 1; n >= 1; --n) {
    acc = acc * sx + table.scaled_coefficient(n);
  }
  return (acc * sx).to_complex();
}

cplx evaluate_series(cplx x, const CoefficientTable& table) {
  return evaluate_series(x, table, table.order());
}

}  // namespace genw
