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

#include "genw/hyper.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bigfloat.hpp"
#include "genw/error.hpp"

namespace genw {
namespace {

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  struct Part {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
      const double t = sum + v;
      carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    double value() const { return sum + carry; }
  };
  Part re_, im_;
};

// (c)_j = 0 for some j < k.
bool pochhammer_vanishes(cplx c, unsigned k) {
  return is_integer_valued(c) && c.real() <= 0.0 && c.real() > -static_cast<double>(k);
}

cplx int_pow(cplx z, unsigned k) {
  cplx r(1.0, 0.0);
  while (k != 0) {
    if (k & 1U) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

double factorial(unsigned k) {
  double r = 1.0;
  for (unsigned j = 2; j <= k; ++j) r *= j;
  return r;
}

// Depth-first accumulation of the F_D terms; each term is derived from its
// parent by one multiplicative update.
void fd_accumulate(const LauricellaArgs& a, std::size_t i, unsigned remaining, unsigned weight,
                   cplx term, CompensatedSum& sum) {
  if (i == a.b.size()) {
    sum.add(term);
    return;
  }
  unsigned w = weight;
  for (unsigned ki = 0;; ++ki) {
    fd_accumulate(a, i + 1, remaining - ki, w, term, sum);
    if (ki == remaining) break;
    term *= (-static_cast<double>(a.k) + w) * (a.b[i] + static_cast<double>(ki)) * a.x[i] /
            ((a.c + static_cast<double>(w)) * static_cast<double>(ki + 1));
    ++w;
  }
}

}  // namespace

cplx pochhammer(cplx q, unsigned k) {
  cplx r(1.0, 0.0);
  for (unsigned j = 0; j < k; ++j) r *= q + static_cast<double>(j);
  return r;
}

cplx falling_factorial(cplx x, unsigned a) {
  cplx r(1.0, 0.0);
  for (unsigned j = 0; j < a; ++j) r *= x - static_cast<double>(j);
  return r;
}

MultiIndex::MultiIndex(std::vector<unsigned> k) : k_(std::move(k)) {
  for (unsigned v : k_) weight_ += v;
}

MultiIndexStream::MultiIndexStream(std::size_t m, unsigned max_weight) : max_weight_(max_weight) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "multi_indices: m must be at least 1");
  current_.k_.assign(m, 0);
}

std::optional<MultiIndex> MultiIndexStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return current_;
}

// Compositions of a fixed weight in descending lexicographic order, then the
// next weight starting from (w, 0, ..., 0).
bool MultiIndexStream::advance() {
  auto& k = current_.k_;
  const std::size_t m = k.size();
  std::size_t j = m;
  for (std::size_t i = m - 1; i-- > 0;) {
    if (k[i] > 0) {
      j = i;
      break;
    }
  }
  if (j == m) {
    if (current_.weight_ == max_weight_) return false;
    ++current_.weight_;
    std::fill(k.begin(), k.end(), 0U);
    k[0] = current_.weight_;
    return true;
  }
  const unsigned tail = k[m - 1];
  k[m - 1] = 0;
  --k[j];
  k[j + 1] = tail + 1;
  return true;
}

std::vector<MultiIndex> multi_indices(std::size_t m, unsigned max_weight) {
  std::vector<MultiIndex> out;
  MultiIndexStream stream(m, max_weight);
  while (auto idx = stream.next()) out.push_back(std::move(*idx));
  return out;
}

cplx lauricella_fd(const LauricellaArgs& args) {
  if (args.b.empty() || args.b.size() != args.x.size()) {
    throw Error(ErrorCode::kInvalidArgument, "lauricella_fd: b and x must be non-empty and of equal length");
  }
  if (pochhammer_vanishes(args.c, args.k)) {
    throw Error(ErrorCode::kInvalidLauricellaC,
                "lauricella_fd: (c)_j vanishes for c = " + std::to_string(args.c.real()));
  }
  CompensatedSum sum;
  fd_accumulate(args, 0, args.k, 0, cplx(1.0, 0.0), sum);
  return sum.value();
}

cplx chu_vandermonde_lhs(unsigned k, std::span<const cplx> q, std::span<const cplx> w) {
  if (q.empty() || q.size() != w.size()) {
    throw Error(ErrorCode::kInvalidArgument, "chu_vandermonde_lhs: q and w must be non-empty and of equal length");
  }
  const std::size_t r = q.size();
  const double kfact = factorial(k);
  CompensatedSum sum;
  std::vector<unsigned> parts(r, 0);
  // Enumerate compositions with an odometer over the first r-1 parts.
  while (true) {
    unsigned used = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) used += parts[j];
    if (used <= k) {
      parts[r - 1] = k - used;
      cplx term(kfact, 0.0);
      for (std::size_t j = 0; j < r; ++j) {
        term *= pochhammer(q[j], parts[j]) * int_pow(w[j], parts[j]) /
                factorial(parts[j]);
      }
      sum.add(term);
    }
    std::size_t pos = 0;
    while (pos + 1 < r) {
      if (++parts[pos] <= k) break;
      parts[pos] = 0;
      ++pos;
    }
    if (pos + 1 >= r) break;
  }
  return sum.value();
}

cplx chu_vandermonde_rhs(unsigned k, std::span<const cplx> q, std::span<const cplx> w,
                         std::size_t center) {
  if (q.empty() || q.size() != w.size()) {
    throw Error(ErrorCode::kInvalidArgument, "chu_vandermonde_rhs: q and w must be non-empty and of equal length");
  }
  if (center >= q.size()) {
    throw Error(ErrorCode::kInvalidArgument, "chu_vandermonde_rhs: center index out of range");
  }
  if (pochhammer_vanishes(q[center], k)) {
    throw Error(ErrorCode::kInvalidCenterQ, "chu_vandermonde_rhs: q at the center is in {0, -1, ..., -(k-1)}");
  }
  const cplx wc = w[center];
  if (wc == cplx(0.0, 0.0)) {
    throw Error(ErrorCode::kInvalidCenterW, "chu_vandermonde_rhs: w at the center is zero");
  }
  cplx qsum(0.0, 0.0);
  for (const cplx& v : q) qsum += v;
  const cplx head = int_pow(wc, k) * pochhammer(qsum, k);
  if (q.size() == 1) return head;

  LauricellaArgs args;
  args.k = k;
  args.c = qsum;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (j == center) continue;
    args.b.push_back(q[j]);
    args.x.push_back(1.0 - w[j] / wc);
  }
  return head * lauricella_fd(args);
}

std::pair<cplx, cplx> lauricella_reflection_check(unsigned k, std::span<const cplx> b, cplx c,
                                                  std::span<const cplx> x) {
  LauricellaArgs lhs_args{k, {b.begin(), b.end()}, c, {x.begin(), x.end()}};
  const cplx lhs = lauricella_fd(lhs_args);

  cplx bsum(0.0, 0.0);
  for (const cplx& v : b) bsum += v;
  LauricellaArgs rhs_args{k, {b.begin(), b.end()}, 1.0 + bsum - static_cast<double>(k) - c, {}};
  for (const cplx& v : x) rhs_args.x.push_back(1.0 - v);
  const cplx rhs = pochhammer(c - bsum, k) / pochhammer(c, k) * lauricella_fd(rhs_args);
  return {lhs, rhs};
}

ScaledComplex fn_coefficient(unsigned n, const ParamSet& params) {
  return detail::coefficient_pair(n, params).f_value;
}

namespace detail {
namespace {

constexpr long kMinPrecision = 96;
constexpr long kMaxPrecision = 1L << 18;

struct KernelResult {
  BigComplex sum;
  long max_term_exponent;
  std::size_t term_count;
};

// Graded sum of the F_n terms at a fixed precision. Layer w holds the terms of
// weight w; every index of weight w is generated exactly once from its parent
// k - e_j, j being its last nonzero position.
KernelResult fn_kernel(unsigned n, const ParamSet& params, mpfr_prec_t prec) {
  const std::size_t m = params.size();
  ComplexWorkspace ws(prec);

  // step[i * n + kk] = (n p_i + kk) / (n t_i)
  std::vector<BigComplex> step;
  step.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    BigComplex inv_nt(prec, params.root(i));
    mpfr_mul_ui(inv_nt.re.get(), inv_nt.re.get(), n, MPFR_RNDN);
    mpfr_mul_ui(inv_nt.im.get(), inv_nt.im.get(), n, MPFR_RNDN);
    ws.invert(inv_nt);
    BigComplex np(prec, params.exponent(i));
    mpfr_mul_ui(np.re.get(), np.re.get(), n, MPFR_RNDN);
    mpfr_mul_ui(np.im.get(), np.im.get(), n, MPFR_RNDN);
    for (unsigned kk = 0; kk < n; ++kk) {
      BigComplex s(np);
      if (kk != 0) mpfr_add_ui(s.re.get(), s.re.get(), kk, MPFR_RNDN);
      ws.mul(s, inv_nt);
      step.push_back(std::move(s));
    }
  }

  struct Layer {
    std::vector<unsigned> index;  // count * m
    std::vector<std::size_t> last;
    std::vector<BigComplex> term;
    std::size_t count = 0;
  };
  auto ensure = [prec, m](Layer& layer, std::size_t count) {
    layer.index.resize(count * m);
    layer.last.resize(count);
    while (layer.term.size() < count) layer.term.emplace_back(prec);
  };

  Layer prev;
  Layer cur;
  ensure(prev, 1);
  prev.count = 1;
  std::fill(prev.index.begin(), prev.index.end(), 0U);
  prev.last[0] = 0;
  mpfr_set_ui(prev.term[0].re.get(), 1, MPFR_RNDN);
  mpfr_set_ui(prev.term[0].im.get(), 0, MPFR_RNDN);

  KernelResult out{BigComplex(prec, cplx(1.0, 0.0)), 1, 1};
  for (unsigned weight = 1; weight < n; ++weight) {
    const long pochhammer_factor = static_cast<long>(weight) - static_cast<long>(n);  // 1 - n + (w-1)
    std::size_t children = 0;
    for (std::size_t j = 0; j < prev.count; ++j) children += m - prev.last[j];
    ensure(cur, children);
    cur.count = 0;
    for (std::size_t j = 0; j < prev.count; ++j) {
      const unsigned* parent = &prev.index[j * m];
      for (std::size_t i = prev.last[j]; i < m; ++i) {
        const std::size_t c = cur.count++;
        unsigned* child = &cur.index[c * m];
        std::copy(parent, parent + m, child);
        const unsigned ki = child[i]++;
        cur.last[c] = i;
        BigComplex& t = cur.term[c];
        mpfr_set(t.re.get(), prev.term[j].re.get(), MPFR_RNDN);
        mpfr_set(t.im.get(), prev.term[j].im.get(), MPFR_RNDN);
        ws.mul(t, step[i * n + ki]);
        mul_real_ratio(t, pochhammer_factor, ki + 1UL);
        add(out.sum, t);
        if (!t.is_zero()) out.max_term_exponent = std::max(out.max_term_exponent, t.exponent());
      }
    }
    out.term_count += cur.count;
    std::swap(prev, cur);
  }
  return out;
}

}  // namespace

CoefficientPair coefficient_pair(unsigned n, const ParamSet& params, long precision_hint) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "coefficient index n must be at least 1");
  const std::size_t m = params.size();

  long prec = std::clamp(precision_hint, kMinPrecision, kMaxPrecision);
  BigComplex sum(prec, cplx(1.0, 0.0));
  if (m != 0 && n > 1) {
    for (int attempt = 0;; ++attempt) {
      KernelResult r = fn_kernel(n, params, prec);
      long needed;
      if (r.sum.is_zero()) {
        needed = 2 * prec;
      } else {
        const long guard = std::bit_width(r.term_count) + std::bit_width(10UL * n) + 64;
        needed = r.max_term_exponent - r.sum.exponent() + guard;
      }
      if (needed <= prec || prec >= kMaxPrecision || attempt >= 8) {
        sum = std::move(r.sum);
        break;
      }
      prec = std::min(kMaxPrecision, std::max(needed + 32, prec + prec / 4));
    }
  }

  // c_n = (-n)^{n-1} / n! * prod (-t_i)^{-n p_i} * F_n
  BigComplex coeff(prec);
  {
    BigFloat fact(prec);
    mpfr_ui_pow_ui(coeff.re.get(), n, n - 1, MPFR_RNDN);
    mpfr_fac_ui(fact.get(), n, MPFR_RNDN);
    mpfr_div(coeff.re.get(), coeff.re.get(), fact.get(), MPFR_RNDN);
    if ((n - 1) % 2 == 1) mpfr_neg(coeff.re.get(), coeff.re.get(), MPFR_RNDN);
  }
  ComplexWorkspace ws(prec);
  if (m != 0) {
    BigComplex log_sum(prec);
    BigComplex tmp(prec);
    for (std::size_t i = 0; i < m; ++i) {
      BigComplex neg_t(prec, -params.root(i));
      principal_log(tmp, neg_t);
      ws.mul(tmp, BigComplex(prec, params.exponent(i)));
      add(log_sum, tmp);
    }
    mpfr_mul_si(log_sum.re.get(), log_sum.re.get(), -static_cast<long>(n), MPFR_RNDN);
    mpfr_mul_si(log_sum.im.get(), log_sum.im.get(), -static_cast<long>(n), MPFR_RNDN);
    complex_exp(tmp, log_sum);
    ws.mul(coeff, tmp);
    ws.mul(coeff, sum);
  }
  return {to_scaled(sum), to_scaled(coeff), prec};
}

}  // namespace detail
}  // namespace genw
