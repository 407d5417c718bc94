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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lorflats/basis_poly.hpp"
#include "lorflats/chow.hpp"
#include "lorflats/error.hpp"
#include "lorflats/lorentzian.hpp"
#include "lorflats/matroid.hpp"
#include "oracles.hpp"

namespace lorflats {
namespace {

using Index = GradedSubposet::Index;
using testing::catalog;
using testing::NamedMatroid;

// Collects the first few failure messages of one criterion.
class Outcome {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  const std::vector<std::string>& notes() const { return notes_; }
  void note(const std::string& detail) { detail_ = detail; }
  const std::string& detail() const { return detail_; }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
  std::string detail_;
};

struct Criterion {
  int number;
  std::string title;
  std::function<void(Outcome&)> body;
  double limit_seconds = 0;  // 0 means no runtime bound
};

std::vector<std::int64_t> as_ints(const UniPoly& p) {
  std::vector<std::int64_t> out;
  for (const Rational& c : p.coefficients()) out.push_back(c.get_num().get_si());
  return out;
}

std::string text(const std::vector<std::int64_t>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << ")";
  return s.str();
}

template <typename Fn>
void for_each_interval(const GradedSubposet& p, Fn&& fn) {
  for (Index k = 0; k < p.size(); ++k) {
    for (Index l = 0; l < p.size(); ++l) {
      if (p.less(k, l)) fn(k, l);
    }
  }
}

std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t> oracle_mu(const Matroid& m) {
  return testing::oracle_mobius(testing::oracle_flats(m.bases(), m.ground().size()));
}

void catalog_charpolys(Outcome& o) {
  for (const NamedMatroid& nm : catalog()) {
    const auto chi = as_ints(characteristic_polynomial(nm.matroid));
    const auto expected = testing::oracle_chi(nm.matroid);
    o.expect(chi == expected, nm.name + ": chi " + text(chi) + " vs oracle " + text(expected));
    const auto bar = testing::oracle_divide_by_t_minus_one(expected);
    for (int i = 0; i < nm.matroid.ground().size(); ++i) {
      const UniPoly reduced = reduced_characteristic_polynomial(nm.matroid, i);
      o.expect(as_ints(reduced) == bar, nm.name + ": reduced chi differs at i = " +
                                            std::to_string(i));
      o.expect(reduced * UniPoly::linear_factor(1) == characteristic_polynomial(nm.matroid),
               nm.name + ": (t - 1) * reduced != chi");
    }
  }
}

void heron_rota_welsh(Outcome& o) {
  for (const NamedMatroid& nm : catalog()) {
    const auto a = reduced_characteristic_polynomial(nm.matroid, 0)
                       .absolute_coefficients_leading_first();
    o.expect(is_log_concave(a), nm.name + " is not log-concave");
    for (std::size_t k = 1; k + 1 < a.size(); ++k) {
      o.expect(a[k] * a[k] >= a[k - 1] * a[k + 1], nm.name + " fails at k = " + std::to_string(k));
    }
  }
  const auto k4 = reduced_characteristic_polynomial(graphic_matroid(testing::k4_edges()), 0)
                      .absolute_coefficients_leading_first();
  const auto f7 = reduced_characteristic_polynomial(fano_matroid(), 0)
                      .absolute_coefficients_leading_first();
  o.expect(k4[1] * k4[1] == 25 && k4[0] * k4[2] == 6, "K4 sequence is not (1, 5, 6)");
  o.expect(f7[1] * f7[1] == 36 && f7[0] * f7[2] == 8, "F7 sequence is not (1, 6, 8)");
}

void bivariate_bridge(Outcome& o) {
  for (const NamedMatroid& nm : catalog()) {
    const Matroid& m = nm.matroid;
    const FlatLattice lat = flats_lattice(m);
    const auto mu = oracle_mu(m);
    const int r = m.rank();
    const Subset top = Subset::full(m.ground().size());
    PolCache cache(lat.poset());
    const auto b = testing::oracle_divide_by_t_minus_one(testing::oracle_chi(m));
    for (int i = 0; i < m.ground().size(); ++i) {
      if (m.is_loop(i)) continue;
      // Direct expansion from the brute-force Mobius table.
      MultiPoly expected(generic_variables(2));
      for (Subset f : lat.flats()) {
        if (f.contains(i)) continue;
        const int rf = m.rank_of(f);
        expected.add_term(Monomial::variable(0, static_cast<unsigned>(r - 1 - rf)) *
                              Monomial::variable(1, static_cast<unsigned>(rf)),
                          Rational(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(rf)) *
                                   Integer(std::abs(mu.at({0, f.bits()})))));
      }
      MultiPoly got(generic_variables(2));
      try {
        got = alpha_beta_bivariate(cache, Subset(), top, i);
      } catch (const Error& e) {
        o.fail(nm.name + ": " + e.what());
        continue;
      }
      o.expect(got == expected, nm.name + ": expansion differs at i = " + std::to_string(i));
      const auto normalized = bivariate_normalized_coefficients(got);
      for (std::size_t k = 0; k < normalized.size(); ++k) {
        const std::int64_t bk = std::abs(b[b.size() - 1 - k]);
        o.expect(normalized[k] == Rational(bk),
                 nm.name + ": normalized coefficient " + std::to_string(k) + " != |b_k|");
      }
    }
  }
}

void special_evaluations(Outcome& o) {
  int count = 0;
  for (const NamedMatroid& nm : catalog()) {
    const FlatLattice lat = flats_lattice(nm.matroid);
    const GradedSubposet& p = lat.poset();
    const auto mu = oracle_mu(nm.matroid);
    PolCache cache(p);
    for_each_interval(p, [&](Index k, Index l) {
      const Subset ks = p.element(k);
      const Subset ls = p.element(l);
      const CoordsPtr c = IntervalCoords::make(ks, ls);
      const Rational fact(factorial(static_cast<unsigned>(p.d(k, l))));
      const Rational mu_abs(std::abs(mu.at({ks.bits(), ls.bits()})));
      o.expect(eval_at(cache, ks, ls, alpha(c)) == 1 / fact,
               nm.name + " " + to_string(ks) + " " + to_string(ls) + ": pol(alpha)");
      o.expect(eval_at(cache, ks, ls, beta(c)) == mu_abs / fact,
               nm.name + " " + to_string(ks) + " " + to_string(ls) + ": pol(beta)");
      ++count;
    });
  }
  o.note(std::to_string(count) + " intervals");
}

void structural_identities(Outcome& o) {
  int derivative = 0;
  int lineality = 0;
  int squares = 0;
  for (const NamedMatroid& nm : catalog()) {
    const FlatLattice lat = flats_lattice(nm.matroid);
    const GradedSubposet& p = lat.poset();
    PolCache cache(p);
    for_each_interval(p, [&](Index k, Index l) {
      const Subset ks = p.element(k);
      const Subset ls = p.element(l);
      const std::string where = nm.name + " " + to_string(ks) + " " + to_string(ls);
      if (p.d(k, l) <= 4) {
        const Check c = check_derivative_identity(cache, ks, ls);
        o.expect(c.ok, where + ": " + c.witness);
        ++derivative;
      }
      if ((ls - ks).size() >= 2) {
        const Check c = check_lineality_invariance(cache, ks, ls, 50, 1000 + k * 97 + l);
        o.expect(c.ok, where + ": " + c.witness);
        ++lineality;
      }
      if (p.rank(k, l) == 3) {
        const Check c = check_rank_two_squares(cache, ks, ls);
        o.expect(c.ok, where + ": " + c.witness);
        ++squares;
      }
    });
  }
  o.note(std::to_string(derivative) + " derivative, " + std::to_string(lineality) +
         " lineality, " + std::to_string(squares) + " rank-3 intervals");
}

void lorentzian_certification(Outcome& o) {
  for (const NamedMatroid& nm : catalog()) {
    const FlatLattice lat = flats_lattice(nm.matroid);
    PolCache cache(lat.poset());
    const Subset top = Subset::full(nm.matroid.ground().size());
    const LorentzianCertificate cert = certify_sampled(cache, Subset(), top, 20, 1);
    o.expect(cert.results.size() == 20, nm.name + ": expected 20 samples");
    for (std::size_t i = 0; i < cert.results.size(); ++i) {
      const SampleResult& r = cert.results[i];
      o.expect(r.passed && r.contraction > 0 && (!r.hessian || r.hessian->n_plus == 1),
               nm.name + " sample " + std::to_string(i) + ": " + r.witness);
    }
    o.expect(cert.verdict, nm.name + ": verdict false");
  }
}

void inertia_oracle(Outcome& o) {
  std::mt19937_64 rng(2026);
  int separated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
    const SymMatrix a = testing::random_symmetric(rng, n);
    const auto f = testing::float_inertia(a, 1e-9);
    const InertiaTriple exact = inertia(a);
    const std::string where = "matrix " + std::to_string(trial) + ": exact " + to_string(exact);
    if (f.n_zero == 0) {
      ++separated;
      o.expect(exact.n_plus == f.n_plus && exact.n_minus == f.n_minus && exact.n_zero == 0, where);
      continue;
    }
    // Eigenvalues inside the tolerance band may carry either sign.
    o.expect(exact.n_plus >= f.n_plus && exact.n_plus <= f.n_plus + f.n_zero &&
                 exact.n_minus >= f.n_minus && exact.n_minus <= f.n_minus + f.n_zero,
             where);
  }
  o.note("100 matrices, " + std::to_string(separated) + " with every eigenvalue above 1e-9");
}

void chow_verification(Outcome& o) {
  int checked = 0;
  auto verify = [&](const std::string& name, PolCache& cache, Subset k, Subset l) {
    const ChowReport r = verify_vol_eq_pol(cache, k, l);
    o.expect(r.top_one_dimensional, name + ": top piece is not one-dimensional");
    o.expect(r.flags_consistent, name + ": flag monomials disagree");
    o.expect(r.equal, name + ": vol != pol " + r.witness);
    ++checked;
  };
  for (const NamedMatroid& nm : catalog()) {
    const FlatLattice lat = flats_lattice(nm.matroid);
    const GradedSubposet& p = lat.poset();
    if (p.open_interval(lat.bottom(), lat.top()).size() > 16 || p.d(lat.bottom(), lat.top()) > 4) {
      continue;
    }
    PolCache cache(p);
    verify(nm.name, cache, Subset(), Subset::full(nm.matroid.ground().size()));
  }
  const FlatLattice fano = flats_lattice(fano_matroid());
  PolCache cache(fano.poset());
  for_each_interval(fano.poset(), [&](Index k, Index l) {
    if (fano.poset().d(k, l) > 2) return;
    verify("F7 " + to_string(fano.poset().element(k)) + " " + to_string(fano.poset().element(l)),
           cache, fano.poset().element(k), fano.poset().element(l));
  });
  o.note(std::to_string(checked) + " intervals");
}

void poset_predicates(Outcome& o) {
  for (const NamedMatroid& nm : catalog()) {
    const GradedSubposet p = flats_lattice(nm.matroid).poset();
    const Check flats = check_lattice_of_flats(p);
    o.expect(flats.ok, nm.name + ": (F1)-(F3) " + flats.witness);
    o.expect(is_one_balanced(p), nm.name + ": not 1-balanced");
    o.expect(is_semimodular(p), nm.name + ": not semimodular");
    o.expect(is_interval_connected(p), nm.name + ": not interval connected");
    for_each_interval(p, [&](Index k, Index l) {
      const GradedSubposet sub = p.interval(k, l);
      const MobiusTable mu = mobius(sub);
      const std::string where = nm.name + " " + to_string(p.element(k)) + " " +
                                to_string(p.element(l));
      o.expect(check_flat_axioms(p, k, l).ok, where + ": (F1)-(F3)");
      o.expect(check_weisner_all(sub, mu).ok, where + ": Weisner");
      o.expect(check_mobius_sign_alternation(sub, mu).ok, where + ": sign alternation");
    });
  }
}

void altdef_sampling(Outcome& o) {
  int restrictions = 0;
  for (const NamedMatroid& nm : catalog()) {
    const FlatLattice lat = flats_lattice(nm.matroid);
    const GradedSubposet& p = lat.poset();
    PolCache cache(p);
    for_each_interval(p, [&](Index k, Index l) {
      const int d = p.d(k, l);
      if (d < 1) return;
      const Subset ks = p.element(k);
      const Subset ls = p.element(l);
      const std::string where = nm.name + " " + to_string(ks) + " " + to_string(ls);
      const LorentzianCertificate cert = certify_sampled(cache, ks, ls, 3, 17 + k + l);
      if (!cert.verdict) {
        o.fail(where + ": not certified");
        return;
      }
      const MultiPoly& f = cache.pol(k, l);
      const CoordsPtr c = IntervalCoords::make(ks, ls);
      const std::vector<IntervalVector> ab = {alpha(c), beta(c)};
      const MultiPoly bivariate = restrict_to_directions(f, ab);
      o.expect(is_lorentzian_orthant(bivariate), where + ": (alpha, beta) restriction");
      o.expect(is_log_concave(bivariate_normalized_coefficients(bivariate)),
               where + ": (alpha, beta) coefficients not log-concave");
      std::mt19937_64 rng(static_cast<std::uint64_t>(1 + k * 131 + l));
      for (int s = 0; s < 3; ++s) {
        const std::vector<IntervalVector> two = {random_strictly_submodular(c, rng),
                                                 random_strictly_submodular(c, rng)};
        const std::vector<IntervalVector> three = {random_strictly_submodular(c, rng),
                                                   random_strictly_submodular(c, rng),
                                                   random_strictly_submodular(c, rng)};
        const Check c2 = check_lorentzian_orthant(restrict_to_directions(f, two));
        const Check c3 = check_lorentzian_orthant(restrict_to_directions(f, three));
        o.expect(c2.ok, where + ": bivariate " + c2.witness);
        o.expect(c3.ok, where + ": trivariate " + c3.witness);
        restrictions += 2;
      }
    });
  }
  o.note(std::to_string(restrictions) + " sampled restrictions");
}

}  // namespace
}  // namespace lorflats

int main() {
  using lorflats::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "catalog characteristic polynomials", lorflats::catalog_charpolys, 10.0},
      {2, "log-concave reduced coefficients", lorflats::heron_rota_welsh},
      {3, "bivariate alpha/beta bridge", lorflats::bivariate_bridge},
      {4, "pol(alpha) and pol(beta)", lorflats::special_evaluations},
      {5, "structural identities", lorflats::structural_identities},
      {6, "sampled Lorentzian certification", lorflats::lorentzian_certification},
      {7, "exact inertia vs float eigensolver", lorflats::inertia_oracle},
      {8, "Chow volume equals pol", lorflats::chow_verification, 300.0},
      {9, "poset predicates", lorflats::poset_predicates},
      {10, "restrictions are orthant Lorentzian", lorflats::altdef_sampling},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    lorflats::Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.fail("took " + std::to_string(seconds) + " s, limit " +
                   std::to_string(c.limit_seconds) + " s");
    }
    std::printf("criterion %2d: %s  %s (%.2f s%s%s)\n", c.number, outcome.ok() ? "PASS" : "FAIL",
                c.title.c_str(), seconds, outcome.detail().empty() ? "" : ", ",
                outcome.detail().c_str());
    for (const std::string& note : outcome.notes()) std::printf("    %s\n", note.c_str());
    if (!outcome.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
