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

#ifndef GENW_HYPER_HPP_
#define GENW_HYPER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "genw/params.hpp"
#include "genw/scaled_complex.hpp"

namespace genw {

/// Rising factorial (q)_k = q (q+1) ... (q+k-1), as a direct product.
cplx pochhammer(cplx q, unsigned k);

/// Falling factorial x (x-1) ... (x-a+1).
cplx falling_factorial(cplx x, unsigned a);

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> k);

  std::size_t size() const noexcept { return k_.size(); }
  unsigned weight() const noexcept { return weight_; }
  unsigned operator[](std::size_t i) const { return k_[i]; }
  std::span<const unsigned> entries() const noexcept { return k_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  friend class MultiIndexStream;
  std::vector<unsigned> k_;
  unsigned weight_ = 0;
};

/// Streams every m-vector of nonnegative integers with weight <= max_weight
/// exactly once, in graded order (all of weight 0, then weight 1, ...).
class MultiIndexStream {
 public:
  MultiIndexStream(std::size_t m, unsigned max_weight);

  std::optional<MultiIndex> next();

 private:
  bool advance();

  MultiIndex current_;
  unsigned max_weight_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<MultiIndex> multi_indices(std::size_t m, unsigned max_weight);

struct LauricellaArgs {
  unsigned k = 0;        // a = -k
  std::vector<cplx> b;
  cplx c{1.0, 0.0};
  std::vector<cplx> x;
};

/// Terminating Lauricella F_D^{(m)}(-k, b; c; x). Throws
/// Error(kInvalidLauricellaC) when (c)_j = 0 for some j <= k and
/// Error(kInvalidArgument) when b and x differ in length or are empty.
cplx lauricella_fd(const LauricellaArgs& args);

/// F_n = sum_k (1-n)_{|k|} prod (n p_i)_{k_i} / (k_i! (n t_i)^{k_i}), the
/// terminating Lauricella-Kampe de Feriet polynomial that multiplies the n-th
/// coefficient of the inverse series. Evaluated exactly term by term in
/// multiprecision, with the working precision raised until the cancellation
/// between terms is covered.
ScaledComplex fn_coefficient(unsigned n, const ParamSet& params);

/// sum over compositions of k into r parts of
///   multinomial(k; k_1..k_r) prod (q_j)_{k_j} w_j^{k_j}.
cplx chu_vandermonde_lhs(unsigned k, std::span<const cplx> q, std::span<const cplx> w);

/// The closed form of chu_vandermonde_lhs centered on index `center`
/// (zero-based): w_c^k (sum q)_k F_D^{(r-1)}(-k, q_{!=c}; sum q; 1 - w_{!=c}/w_c).
/// Throws Error(kInvalidCenterQ) if q_c is in {0, -1, ..., -(k-1)},
/// Error(kInvalidCenterW) if w_c = 0, Error(kInvalidLauricellaC) if sum q is.
cplx chu_vandermonde_rhs(unsigned k, std::span<const cplx> q, std::span<const cplx> w,
                         std::size_t center);

/// Both sides of the F_D reflection
///   F_D(-k, b; c; x) = (c - sum b)_k / (c)_k F_D(-k, b; 1 + sum b - k - c; 1 - x).
std::pair<cplx, cplx> lauricella_reflection_check(unsigned k, std::span<const cplx> b, cplx c,
                                                  std::span<const cplx> x);

namespace detail {

// F_n and c_n evaluated together at one working precision.
struct CoefficientPair {
  ScaledComplex f_value;
  ScaledComplex coefficient;
  long precision_bits = 0;
};

CoefficientPair coefficient_pair(unsigned n, const ParamSet& params, long precision_hint = 0);

}  // namespace detail

}  // namespace genw

#endif  // GENW_HYPER_HPP_
