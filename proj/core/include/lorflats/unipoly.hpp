// Copyright 2026 The lorflats Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORFLATS_UNIPOLY_HPP_
#define LORFLATS_UNIPOLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lorflats/rational.hpp"

namespace lorflats {

// Dense univariate polynomial in t with exact rational coefficients;
// coefficient k multiplies t^k. Trailing zeros are trimmed so the leading
// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  // (t - root)
  static UniPoly linear_factor(const Rational& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;

  // Division by the monic (t - root): returns (quotient, remainder).
  std::pair<UniPoly, Rational> divide_by_linear(const Rational& root) const;

  // |coefficients| listed from the leading term down to the constant term.
  std::vector<Rational> absolute_coefficients_leading_first() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  // "t^2 - 3*t + 2"
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// a_k^2 >= a_{k-1} a_{k+1} for all interior k.
bool is_log_concave(const std::vector<Rational>& seq);

}  // namespace lorflats

#endif  // LORFLATS_UNIPOLY_HPP_
