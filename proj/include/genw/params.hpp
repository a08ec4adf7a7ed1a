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

#ifndef GENW_PARAMS_HPP_
#define GENW_PARAMS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "genw/scaled_complex.hpp"

namespace genw {

// The data (t_1..t_m, p_1..p_m) of the forward map
//   f(z) = z (z - t_1)^{p_1} ... (z - t_m)^{p_m} e^z.
// Every t_i and p_i must be nonzero; m = 0 gives the classical z e^z.
class ParamSet {
 public:
  ParamSet() = default;
  // Throws Error(kInvalidArgument) on size mismatch, zero or non-finite entries.
  ParamSet(std::vector<cplx> roots, std::vector<cplx> exponents);

  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  std::span<const cplx> roots() const noexcept { return roots_; }
  std::span<const cplx> exponents() const noexcept { return exponents_; }
  const cplx& root(std::size_t i) const { return roots_.at(i); }
  const cplx& exponent(std::size_t i) const { return exponents_.at(i); }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<cplx> roots_;
  std::vector<cplx> exponents_;
};

}  // namespace genw

#endif  // GENW_PARAMS_HPP_
