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

#include "lorflats/multipoly.hpp"

#include <algorithm>

#include "lorflats/error.hpp"

namespace lorflats {

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(static_cast<std::uint32_t>(var), exponent);
  return m;
}

Monomial Monomial::from_dense(std::span<const unsigned> exponents) {
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > 0) m.factors_.emplace_back(static_cast<std::uint32_t>(v), exponents[v]);
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(std::size_t var) const {
  for (const auto& [v, e] : factors_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

std::vector<unsigned> Monomial::dense(std::size_t num_vars) const {
  std::vector<unsigned> out(num_vars, 0);
  for (const auto& [v, e] : factors_) out[v] = e;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t p = 0;; ++p) {
    if (p == fa.size()) return false;
    if (p == fb.size()) return true;
    if (fa[p].first != fb[p].first) return fa[p].first < fb[p].first;
    if (fa[p].second != fb[p].second) return fa[p].second > fb[p].second;
  }
}

MultiPoly MultiPoly::constant(std::vector<Subset> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<Subset> variables, std::size_t var) {
  if (var >= variables.size()) {
    throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(var));
  }
  MultiPoly p(std::move(variables));
  p.add_term(Monomial::variable(var), 1);
  return p;
}

std::optional<std::size_t> MultiPoly::variable_index(Subset key) const {
  auto it = std::find(vars_.begin(), vars_.end(), key);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& term) { return term.first.degree() == d; });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(vars_.size()) +
                                                  " coordinates, got " + std::to_string(point.size()));
  }
  Rational total = 0;
  Rational power;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      mpz_pow_ui(power.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      value *= power;
    }
    total += value;
  }
  return total;
}

void MultiPoly::require_same_variables(const MultiPoly& o) const {
  if (vars_ != o.vars_) {
    throw Error(ErrorCode::DimensionMismatch, "polynomials use different variable sets");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_variables(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_variables(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b);
  MultiPoly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string MultiPoly::to_string(const VariableNamer& namer) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t v) {
    return namer ? namer(v) : default_variable_name(vars_[v]);
  };
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += " * ";
      body += name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += lorflats::to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += lorflats::to_string(mag) + " * " + body;
    }
  }
  return out;
}

std::vector<Subset> generic_variables(std::size_t m) {
  std::vector<Subset> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) out.push_back(Subset::singleton(static_cast<int>(k)));
  return out;
}

std::string default_variable_name(Subset key) {
  std::string out = "t_{";
  bool first = true;
  for (int e : key.elements()) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

VariableNamer flat_namer(const std::vector<Subset>& variables,
                         const std::function<std::string(int)>& element_label) {
  if (!element_label) {
    return [variables](std::size_t v) { return default_variable_name(variables[v]); };
  }
  return [variables, element_label](std::size_t v) {
    std::string out = "t_{";
    bool first = true;
    for (int e : variables[v].elements()) {
      if (!first) out += ',';
      out += element_label(e);
      first = false;
    }
    return out + "}";
  };
}

VariableNamer list_namer(std::vector<std::string> names) {
  return [names = std::move(names)](std::size_t v) { return names.at(v); };
}

MultiPoly partial(const MultiPoly& f, std::size_t var) {
  if (var >= f.num_variables()) {
    throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(var));
  }
  MultiPoly out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    Monomial reduced;
    for (const auto& [v, ev] : factors) {
      const unsigned ne = v == var ? ev - 1 : ev;
      if (ne > 0) reduced = reduced * Monomial::variable(v, ne);
    }
    out.add_term(reduced, c * e);
  }
  return out;
}

MultiPoly partial(const MultiPoly& f, Subset key) {
  auto idx = f.variable_index(key);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "no variable " + to_string(key));
  return partial(f, *idx);
}

MultiPoly dir_derivative(const MultiPoly& f, std::span<const Rational> direction) {
  if (direction.size() != f.num_variables()) {
    throw Error(ErrorCode::DimensionMismatch, "direction has the wrong dimension");
  }
  MultiPoly out(f.variables());
  for (std::size_t v = 0; v < f.num_variables(); ++v) {
    if (direction[v] == 0) continue;
    out += direction[v] * partial(f, v);
  }
  return out;
}

std::vector<Rational> direction_on_variables(const std::vector<Subset>& variables,
                                             const IntervalVector& v) {
  std::vector<Rational> out;
  out.reserve(variables.size());
  for (Subset key : variables) {
    auto idx = v.coords().index_of(key);
    if (!idx) {
      throw Error(ErrorCode::MissingCoordinate,
                  "direction has no coordinate for variable " + to_string(key));
    }
    out.push_back(v[*idx]);
  }
  return out;
}

MultiPoly dir_derivative(const MultiPoly& f, const IntervalVector& v) {
  const auto direction = direction_on_variables(f.variables(), v);
  return dir_derivative(f, direction);
}

SymMatrix hessian_of_quadratic(const MultiPoly& f) {
  if (!f.is_zero() && (f.degree() != 2 || !f.is_homogeneous())) {
    throw Error(ErrorCode::WrongDegree, "expected a quadratic form, got degree " +
                                            std::to_string(f.degree()));
  }
  SymMatrix h(f.num_variables());
  for (const auto& [m, c] : f.terms()) {
    const auto& factors = m.factors();
    if (factors.size() == 1) {
      h.set(factors[0].first, factors[0].first, 2 * c);
    } else {
      h.set(factors[0].first, factors[1].first, c);
    }
  }
  return h;
}

std::vector<Rational> gradient_at(const MultiPoly& f, std::span<const Rational> point) {
  std::vector<Rational> out(f.num_variables());
  for (std::size_t v = 0; v < f.num_variables(); ++v) out[v] = partial(f, v).evaluate(point);
  return out;
}

SymMatrix hessian_at(const MultiPoly& f, std::span<const Rational> point) {
  const std::size_t n = f.num_variables();
  SymMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly di = partial(f, i);
    for (std::size_t j = i; j < n; ++j) h.set(i, j, partial(di, j).evaluate(point));
  }
  return h;
}

MultiPoly substitute_affine(const MultiPoly& f, std::vector<Subset> new_variables,
                            const std::vector<std::vector<Rational>>& matrix,
                            std::span<const Rational> offset) {
  if (matrix.size() != f.num_variables()) {
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one row per variable");
  }
  if (!offset.empty() && offset.size() != f.num_variables()) {
    throw Error(ErrorCode::DimensionMismatch, "offset needs one entry per variable");
  }
  for (const auto& row : matrix) {
    if (row.size() != new_variables.size()) {
      throw Error(ErrorCode::DimensionMismatch, "substitution row has the wrong length");
    }
  }

  // Images of the old variables as polynomials in the new ones, and a cache
  // of their powers.
  std::vector<std::vector<MultiPoly>> powers(f.num_variables());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(MultiPoly::constant(new_variables, 1));
      MultiPoly image(new_variables);
      for (std::size_t j = 0; j < new_variables.size(); ++j) {
        image.add_term(Monomial::variable(j), matrix[v][j]);
      }
      if (!offset.empty()) image.add_term(Monomial(), offset[v]);
      cache.push_back(std::move(image));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  MultiPoly out(new_variables);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(new_variables, c);
    for (const auto& [v, e] : m.factors()) {
      term = term * power(v, e);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

MultiPoly restrict_to_directions(const MultiPoly& f, std::span<const IntervalVector> directions) {
  std::vector<std::vector<Rational>> matrix(f.num_variables(),
                                            std::vector<Rational>(directions.size()));
  for (std::size_t k = 0; k < directions.size(); ++k) {
    const auto column = direction_on_variables(f.variables(), directions[k]);
    for (std::size_t v = 0; v < f.num_variables(); ++v) matrix[v][k] = column[v];
  }
  return substitute_affine(f, generic_variables(directions.size()), matrix);
}

}  // namespace lorflats
