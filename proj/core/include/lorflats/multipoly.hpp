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

#ifndef LORFLATS_MULTIPOLY_HPP_
#define LORFLATS_MULTIPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorflats/cone.hpp"
#include "lorflats/rational.hpp"
#include "lorflats/subset.hpp"
#include "lorflats/sym_matrix.hpp"

namespace lorflats {

// Sparse exponent vector: (variable index, exponent) pairs sorted by index,
// exponents positive.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::size_t var, unsigned exponent = 1);
  static Monomial from_dense(std::span<const unsigned> exponents);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(std::size_t var) const;
  std::vector<unsigned> dense(std::size_t num_vars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
};

// Canonical term order: lexicographically descending dense exponent vectors,
// so t_0^2 precedes t_0 t_1 precedes t_1^2.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using VariableNamer = std::function<std::string(std::size_t)>;

// Polynomial with exact rational coefficients over variables keyed by subsets
// (the poset elements a polynomial lives on). Zero coefficients are never
// stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<Subset> variables) : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<Subset> variables, const Rational& c);
  static MultiPoly variable(std::vector<Subset> variables, std::size_t var);

  const std::vector<Subset>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::optional<std::size_t> variable_index(Subset key) const;

  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  // Throws DimensionMismatch unless point has one value per variable.
  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Canonical text: "c * t_{1,2}^2 * t_{3} + ...", coefficient 1 omitted.
  // Variables default to t_{...} with 1-based element numerals.
  std::string to_string(const VariableNamer& namer = {}) const;

 private:
  void require_same_variables(const MultiPoly& o) const;

  std::vector<Subset> vars_;
  Terms terms_;
};

// Variable keys {0}, {1}, ..., {m-1} for polynomials not tied to a poset.
std::vector<Subset> generic_variables(std::size_t m);
// Names variables by their key: t_{e1+1,e2+1,...}, or with custom element labels.
std::string default_variable_name(Subset key);
VariableNamer flat_namer(const std::vector<Subset>& variables,
                         const std::function<std::string(int)>& element_label = {});
VariableNamer list_namer(std::vector<std::string> names);

MultiPoly partial(const MultiPoly& f, std::size_t var);
// Throws UnknownVariable.
MultiPoly partial(const MultiPoly& f, Subset key);

// sum_i direction[i] * d/dx_i f. Throws DimensionMismatch.
MultiPoly dir_derivative(const MultiPoly& f, std::span<const Rational> direction);
// Reads the direction off an interval vector at each variable's key. Throws
// MissingCoordinate when a key is not a strict coordinate of v.
MultiPoly dir_derivative(const MultiPoly& f, const IntervalVector& v);
std::vector<Rational> direction_on_variables(const std::vector<Subset>& variables,
                                             const IntervalVector& v);

// Constant Hessian of a quadratic form. Throws WrongDegree unless f is zero
// or homogeneous of degree 2.
SymMatrix hessian_of_quadratic(const MultiPoly& f);
SymMatrix hessian_at(const MultiPoly& f, std::span<const Rational> point);
std::vector<Rational> gradient_at(const MultiPoly& f, std::span<const Rational> point);

// g(y) = f(M y + b) where old variable i equals sum_j M[i][j] y_j + b_i.
// M has one row per variable of f and one column per new variable. An empty
// offset means b = 0. Throws DimensionMismatch.
MultiPoly substitute_affine(const MultiPoly& f, std::vector<Subset> new_variables,
                            const std::vector<std::vector<Rational>>& matrix,
                            std::span<const Rational> offset = {});

// (y_1..y_m) -> f(y_1 v_1 + ... + y_m v_m), over generic_variables(m).
MultiPoly restrict_to_directions(const MultiPoly& f, std::span<const IntervalVector> directions);

}  // namespace lorflats

#endif  // LORFLATS_MULTIPOLY_HPP_
