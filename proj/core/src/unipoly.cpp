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

#include "lorflats/unipoly.hpp"

#include <algorithm>

namespace lorflats {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::linear_factor(const Rational& root) {
  return UniPoly({Rational(-root), Rational(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::pair<UniPoly, Rational> UniPoly::divide_by_linear(const Rational& root) const {
  if (coeffs_.empty()) return {UniPoly(), Rational(0)};
  // Synthetic division, highest degree first.
  std::vector<Rational> quotient(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) quotient[k - 1] = carry;
  }
  return {UniPoly(std::move(quotient)), carry};
}

std::vector<Rational> UniPoly::absolute_coefficients_leading_first() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.push_back(abs(*it));
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (k == 1) power = var;
    if (k > 1) power = var + "^" + std::to_string(k);
    if (power.empty()) {
      out += lorflats::to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += lorflats::to_string(mag) + "*" + power;
    }
  }
  return out;
}

bool is_log_concave(const std::vector<Rational>& seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
  }
  return true;
}

}  // namespace lorflats
