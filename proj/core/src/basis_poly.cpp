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

#include "lorflats/basis_poly.hpp"

#include <random>

#include "lorflats/error.hpp"

namespace lorflats {

namespace {

std::string interval_name(Subset k, Subset l) {
  return "(" + to_string(k) + ", " + to_string(l) + ")";
}

}  // namespace

const MultiPoly& PolCache::pol(Index k, Index l) {
  if (k >= poset_.size() || l >= poset_.size() || !poset_.less(k, l)) {
    throw Error(ErrorCode::NotAnInterval, "need K < L in the poset");
  }
  auto it = memo_.find({k, l});
  if (it != memo_.end()) return it->second;
  MultiPoly built = build(k, l);
  return memo_.emplace(std::make_pair(k, l), std::move(built)).first->second;
}

std::vector<Subset> PolCache::variables(Index k, Index l) const {
  std::vector<Subset> out;
  for (Index f : poset_.open_interval(k, l)) out.push_back(poset_.element(f));
  return out;
}

MultiPoly PolCache::lifted(Index k, Index l, Index f, Index g) {
  const std::vector<Subset> outer = variables(k, l);
  const MultiPoly& inner = pol(f, g);
  const Subset fs = poset_.element(f);
  const Subset gs = poset_.element(g);
  std::vector<std::vector<Rational>> matrix(inner.num_variables(),
                                            std::vector<Rational>(outer.size()));
  for (std::size_t row = 0; row < inner.num_variables(); ++row) {
    const Subset target = inner.variables()[row];
    for (std::size_t col = 0; col < outer.size(); ++col) {
      matrix[row][col] = projection_coefficient(fs, gs, outer[col], target);
    }
  }
  return substitute_affine(inner, outer, matrix);
}

MultiPoly PolCache::build(Index k, Index l) {
  std::vector<Subset> vars = variables(k, l);
  const int d = poset_.d(k, l);
  if (d == 0) return MultiPoly::constant(std::move(vars), 1);
  MultiPoly total(vars);
  const auto middle = poset_.open_interval(k, l);
  for (std::size_t v = 0; v < middle.size(); ++v) {
    const Index f = middle[v];
    total += MultiPoly::variable(vars, v) * lifted(k, l, k, f) * lifted(k, l, f, l);
  }
  total *= ratio(1, d);
  return total;
}

MultiPoly build_pol(const GradedSubposet& poset, Subset k, Subset l) {
  PolCache cache(poset);
  return cache.pol(k, l);
}

bool satisfies_euler_identity(const MultiPoly& f) {
  MultiPoly sum(f.variables());
  for (std::size_t v = 0; v < f.num_variables(); ++v) {
    sum += MultiPoly::variable(f.variables(), v) * partial(f, v);
  }
  const int d = std::max(f.degree(), 0);
  return sum == Rational(d) * f;
}

Check check_derivative_identity(PolCache& cache, Subset k, Subset l) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  const MultiPoly& p = cache.pol(ki, li);
  for (auto f : poset.open_interval(ki, li)) {
    const MultiPoly lhs = partial(p, poset.element(f));
    const MultiPoly rhs = cache.lifted(ki, li, ki, f) * cache.lifted(ki, li, f, li);
    if (lhs != rhs) {
      return Check::fail("derivative identity fails at F = " + to_string(poset.element(f)) +
                         " on " + interval_name(k, l));
    }
  }
  return Check::pass();
}

Check check_lineality_invariance(PolCache& cache, Subset k, Subset l, int trials,
                                 std::uint64_t seed) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  if (const Check balanced = check_balanced(poset.interval(ki, li)); !balanced) {
    throw Error(ErrorCode::PrerequisiteNotBalanced, balanced.witness);
  }
  return check_lineality_sampled(cache, k, l, trials, seed);
}

Check check_lineality_sampled(PolCache& cache, Subset k, Subset l, int trials,
                              std::uint64_t seed) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  const MultiPoly& p = cache.pol(ki, li);
  const CoordsPtr coords = IntervalCoords::make(k, l);
  const std::size_t width = static_cast<std::size_t>(coords->width());
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    IntervalVector x(coords);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = ratio(uniform_int(rng, -20, 20), uniform_int(rng, 1, 6));
    }
    std::vector<Rational> weights(width);
    Rational total = 0;
    for (std::size_t b = 0; b + 1 < width; ++b) {
      weights[b] = ratio(uniform_int(rng, -20, 20), uniform_int(rng, 1, 6));
      total += weights[b];
    }
    weights[width - 1] = -total;
    const IntervalVector w = modular_from_weights(coords, weights);
    const Rational before = p.evaluate(direction_on_variables(p.variables(), x));
    const Rational after = p.evaluate(direction_on_variables(p.variables(), x + w));
    if (before != after) {
      return Check::fail("trial " + std::to_string(trial) + ": pol(x) = " + to_string(before) +
                         " but pol(x + w) = " + to_string(after));
    }
  }
  return Check::pass();
}

Check check_incomparable_mixed_partials(PolCache& cache, Subset k, Subset l) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  const MultiPoly& p = cache.pol(ki, li);
  const auto middle = poset.open_interval(ki, li);
  for (std::size_t a = 0; a < middle.size(); ++a) {
    const MultiPoly pa = partial(p, a);
    for (std::size_t b = a + 1; b < middle.size(); ++b) {
      if (poset.comparable(middle[a], middle[b])) continue;
      if (!partial(pa, b).is_zero()) {
        return Check::fail("mixed partial in " + to_string(poset.element(middle[a])) + " and " +
                           to_string(poset.element(middle[b])) + " is nonzero");
      }
    }
  }
  return Check::pass();
}

Check check_rank_two_squares(PolCache& cache, Subset k, Subset l) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  if (poset.d(ki, li) != 2) {
    return Check::fail("interval " + interval_name(k, l) + " does not have d = 2");
  }
  const MultiPoly& p = cache.pol(ki, li);
  const auto& vars = p.variables();
  const auto middle = poset.open_interval(ki, li);
  MultiPoly atoms(vars);
  for (std::size_t v = 0; v < middle.size(); ++v) {
    if (poset.rank(ki, middle[v]) == 1) atoms += MultiPoly::variable(vars, v);
  }
  MultiPoly rhs = atoms * atoms;
  for (std::size_t g = 0; g < middle.size(); ++g) {
    if (poset.rank(ki, middle[g]) != 2) continue;
    MultiPoly term = MultiPoly::variable(vars, g);
    for (std::size_t f = 0; f < middle.size(); ++f) {
      if (poset.rank(ki, middle[f]) == 1 && poset.less(middle[f], middle[g])) {
        term -= MultiPoly::variable(vars, f);
      }
    }
    rhs -= term * term;
  }
  if (Rational(2) * p != rhs) {
    return Check::fail("2 pol differs from the sum of squares on " + interval_name(k, l));
  }
  return Check::pass();
}

Rational eval_at(PolCache& cache, Subset k, Subset l, const IntervalVector& point) {
  if (point.coords().lower() != k || point.coords().upper() != l) {
    throw Error(ErrorCode::MissingCoordinate, "point lives on " +
                                                  interval_name(point.coords().lower(),
                                                                point.coords().upper()) +
                                                  ", not " + interval_name(k, l));
  }
  const MultiPoly& p = cache.pol(k, l);
  return p.evaluate(direction_on_variables(p.variables(), point));
}

VariableNamer bivariate_namer() { return list_namer({"s", "t"}); }

MultiPoly alpha_beta_expected(const GradedSubposet& poset, const MobiusTable& mu, Subset k,
                              Subset l, int i) {
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  const int d = poset.d(ki, li);
  const auto st = generic_variables(2);
  MultiPoly out(st);
  for (auto f : poset.closed_interval(ki, li)) {
    if (f == li || poset.element(f).contains(i)) continue;
    const int r = poset.rank(ki, f);
    const Rational coeff(binomial(static_cast<unsigned>(d), static_cast<unsigned>(r)) *
                         Integer(std::abs(mu(ki, f))));
    const Monomial m = Monomial::variable(0, static_cast<unsigned>(poset.d(f, li))) *
                       Monomial::variable(1, static_cast<unsigned>(r));
    out.add_term(m, coeff);
  }
  return out;
}

MultiPoly alpha_beta_bivariate(PolCache& cache, Subset k, Subset l, int i) {
  const auto& poset = cache.poset();
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  if (!poset.less(ki, li)) throw Error(ErrorCode::NotAnInterval, "need K < L");
  if (i < 0 || !(l - k).contains(i)) {
    throw Error(ErrorCode::ElementOutsideInterval,
                "element " + std::to_string(i) + " is not in L \\ K");
  }
  const CoordsPtr coords = IntervalCoords::make(k, l);
  const std::vector<IntervalVector> directions = {alpha(coords), beta(coords)};
  MultiPoly got = restrict_to_directions(cache.pol(ki, li), directions);
  got *= Rational(factorial(static_cast<unsigned>(poset.d(ki, li))));
  const MultiPoly expected = alpha_beta_expected(poset, mobius(poset), k, l, i);
  if (got != expected) {
    throw Error(ErrorCode::MismatchWithDirectComputation,
                "bivariate expansion " + got.to_string(bivariate_namer()) +
                    " differs from the Mobius sum " + expected.to_string(bivariate_namer()));
  }
  return got;
}

UniPoly reduced_charpoly_via_pol(const Matroid& m) {
  if (m.has_loops()) throw Error(ErrorCode::HasLoops, "matroid has a loop");
  const int r = m.rank();
  if (r < 1) throw Error(ErrorCode::InvalidParams, "rank must be at least 1");
  const FlatLattice lattice = flats_lattice(m);
  PolCache cache(lattice.poset());
  const Subset bottom = lattice.poset().element(lattice.bottom());
  const Subset top = lattice.poset().element(lattice.top());
  const CoordsPtr coords = IntervalCoords::make(bottom, top);
  const std::vector<IntervalVector> directions = {alpha(coords), beta(coords)};
  MultiPoly f = restrict_to_directions(cache.pol(lattice.bottom(), lattice.top()), directions);
  f *= Rational(factorial(static_cast<unsigned>(r - 1)));

  // Coefficient of s^(r-1-k) t^k is C(r-1, k) b_k, and b_k is the absolute
  // value of the coefficient of t^(r-1-k).
  std::vector<Rational> coeffs(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    const Monomial mono = Monomial::variable(0, static_cast<unsigned>(r - 1 - k)) *
                          Monomial::variable(1, static_cast<unsigned>(k));
    const Rational b = f.coefficient(mono) /
                       Rational(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(k)));
    coeffs[static_cast<std::size_t>(r - 1 - k)] = k % 2 == 0 ? b : Rational(-b);
  }
  UniPoly via_pol(std::move(coeffs));
  const UniPoly direct = reduced_characteristic_polynomial(m, m.ground().size() - 1);
  if (via_pol != direct) {
    throw Error(ErrorCode::MismatchWithDirectComputation,
                "pol gives " + via_pol.to_string() + " but the Mobius function gives " +
                    direct.to_string());
  }
  return via_pol;
}

}  // namespace lorflats
