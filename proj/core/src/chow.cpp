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

#include "lorflats/chow.hpp"

#include <algorithm>
#include <random>

#include "lorflats/cone.hpp"
#include "lorflats/error.hpp"

namespace lorflats {

namespace {

std::string interval_name(Subset k, Subset l) {
  return "(" + to_string(k) + ", " + to_string(l) + ")";
}

}  // namespace

bool ChowRing::is_chain(const Monomial& m) const {
  const auto& f = m.factors();
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      if (!comparable_[f[a].first][f[b].first]) return false;
    }
  }
  return true;
}

ChowRing ChowRing::build(const GradedSubposet& poset, Subset k, Subset l, ChowLimits limits) {
  const auto ki = poset.require(k);
  const auto li = poset.require(l);
  if (!poset.less(ki, li)) throw Error(ErrorCode::NotAnInterval, "need K < L");
  const auto middle = poset.open_interval(ki, li);
  const int d = poset.d(ki, li);
  if (middle.size() > limits.max_flats || d > limits.max_degree) {
    throw Error(ErrorCode::SizeLimitExceeded,
                interval_name(k, l) + " has " + std::to_string(middle.size()) +
                    " open flats and d = " + std::to_string(d) + "; limits are " +
                    std::to_string(limits.max_flats) + " and " + std::to_string(limits.max_degree));
  }

  ChowRing ring;
  ring.lower_ = k;
  ring.upper_ = l;
  ring.d_ = d;
  const std::size_t n = middle.size();
  for (auto f : middle) ring.vars_.push_back(poset.element(f));
  ring.comparable_.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) ring.comparable_[a][b] = poset.comparable(middle[a], middle[b]);
  }

  // Chain monomials by degree: nondecreasing variable sequences whose
  // entries are pairwise comparable.
  ring.pieces_.resize(static_cast<std::size_t>(d) + 1);
  ring.pieces_[0].monomials.push_back(Monomial());
  for (int deg = 1; deg <= d; ++deg) {
    auto& piece = ring.pieces_[static_cast<std::size_t>(deg)];
    for (const Monomial& m : ring.pieces_[static_cast<std::size_t>(deg) - 1].monomials) {
      const std::size_t start = m.factors().empty() ? 0 : m.factors().back().first;
      for (std::size_t v = start; v < n; ++v) {
        const Monomial next = m * Monomial::variable(v);
        if (ring.is_chain(next)) piece.monomials.push_back(next);
      }
    }
  }
  for (auto& piece : ring.pieces_) {
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.position[piece.monomials[i]] = i;
    piece.relations = RowEchelon(piece.monomials.size());
  }

  // Linear generators of J: sum_{F ni i0} x_F - sum_{F ni j} x_F.
  const auto free = (l - k).elements();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> linear;
  for (std::size_t j = 1; j < free.size(); ++j) {
    std::vector<std::pair<std::size_t, Rational>> form;
    for (std::size_t v = 0; v < n; ++v) {
      const Rational c = Rational(ring.vars_[v].contains(free[0]) ? 1 : 0) -
                         Rational(ring.vars_[v].contains(free[j]) ? 1 : 0);
      if (c != 0) form.emplace_back(v, c);
    }
    linear.push_back(std::move(form));
  }
  for (int deg = 1; deg <= d; ++deg) {
    auto& piece = ring.pieces_[static_cast<std::size_t>(deg)];
    for (const Monomial& m : ring.pieces_[static_cast<std::size_t>(deg) - 1].monomials) {
      for (const auto& form : linear) {
        Row row(piece.monomials.size());
        for (const auto& [v, c] : form) {
          auto it = piece.position.find(m * Monomial::variable(v));
          if (it != piece.position.end()) row[it->second] += c;
        }
        piece.relations.insert(std::move(row));
      }
    }
  }

  const auto dims = ring.graded_dimensions();
  if (dims.back() != 1) {
    throw Error(ErrorCode::TopDegreeNotOneDimensional,
                "degree " + std::to_string(d) + " piece of " + interval_name(k, l) +
                    " has dimension " + std::to_string(dims.back()));
  }

  // Normalize by the flags K < F_1 < ... < F_d < L.
  std::optional<Rational> flag_value;
  std::string first_flag;
  for (const auto& chain : poset.maximal_chains(ki, li)) {
    Monomial m;
    std::string name;
    for (std::size_t c = 1; c + 1 < chain.size(); ++c) {
      const auto v = static_cast<std::size_t>(
          std::find(middle.begin(), middle.end(), chain[c]) - middle.begin());
      m = m * Monomial::variable(v);
      name += to_string(poset.element(chain[c]));
    }
    const Rational value = ring.quotient_class(m).at(0);
    if (!flag_value) {
      flag_value = value;
      first_flag = name;
    } else if (value != *flag_value) {
      throw Error(ErrorCode::FlagInconsistency,
                  "flags " + first_flag + " and " + name + " reduce to different classes");
    }
  }
  if (!flag_value || *flag_value == 0) {
    throw Error(ErrorCode::FlagInconsistency, "flag monomials vanish in the top degree");
  }
  for (const Monomial& m : ring.pieces_.back().monomials) {
    const Rational value = ring.quotient_class(m).at(0) / *flag_value;
    if (value != 0) ring.top_degrees_.emplace(m, value);
  }
  return ring;
}

std::vector<std::size_t> ChowRing::graded_dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& piece : pieces_) out.push_back(piece.monomials.size() - piece.relations.rank());
  return out;
}

Row ChowRing::quotient_class(const Monomial& m) const {
  const int deg = static_cast<int>(m.degree());
  if (deg > d_) return {};
  const auto& piece = pieces_[static_cast<std::size_t>(deg)];
  const auto free = piece.relations.free_columns();
  Row out(free.size());
  auto it = piece.position.find(m);
  if (it == piece.position.end()) return out;  // lies in I
  Row e(piece.monomials.size());
  e[it->second] = 1;
  const Row reduced = piece.relations.reduce(std::move(e));
  for (std::size_t c = 0; c < free.size(); ++c) out[c] = reduced[free[c]];
  return out;
}

Rational ChowRing::degree(const Monomial& m) const {
  if (static_cast<int>(m.degree()) != d_) {
    throw Error(ErrorCode::WrongDegree, "monomial has degree " + std::to_string(m.degree()) +
                                            ", the top degree is " + std::to_string(d_));
  }
  if (d_ == 0) return 1;
  auto it = top_degrees_.find(m);
  return it == top_degrees_.end() ? Rational(0) : it->second;
}

MultiPoly ChowRing::volume_polynomial() const {
  MultiPoly out(vars_);
  if (d_ == 0) {
    out.add_term(Monomial(), 1);
    return out;
  }
  // The multinomial coefficient of x^a in (sum x_F t_F)^d over d! is 1 / prod a_F!.
  for (const auto& [m, value] : top_degrees_) {
    Integer denominator = 1;
    for (const auto& [v, e] : m.factors()) denominator *= factorial(e);
    out.add_term(m, value / Rational(denominator));
  }
  return out;
}

ChowReport verify_vol_eq_pol(PolCache& cache, Subset k, Subset l, ChowLimits limits) {
  ChowReport report;
  report.lower = k;
  report.upper = l;
  std::optional<ChowRing> ring;
  try {
    ring = ChowRing::build(cache.poset(), k, l, limits);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TopDegreeNotOneDimensional) {
      report.witness = e.what();
      return report;
    }
    if (e.code() == ErrorCode::FlagInconsistency) {
      report.top_one_dimensional = true;
      report.witness = e.what();
      return report;
    }
    throw;
  }
  report.graded_dimensions = ring->graded_dimensions();
  report.top_one_dimensional = true;
  report.flags_consistent = true;
  const MultiPoly vol = ring->volume_polynomial();
  const MultiPoly& pol = cache.pol(k, l);
  if (vol == pol) {
    report.equal = true;
    return report;
  }
  const MultiPoly diff = vol - pol;
  const auto& [m, c] = *diff.terms().begin();
  const MultiPoly term = [&] {
    MultiPoly t(vol.variables());
    t.add_term(m, 1);
    return t;
  }();
  report.witness = "coefficient of " + term.to_string() + ": vol " +
                   to_string(vol.coefficient(m)) + ", pol " + to_string(pol.coefficient(m));
  return report;
}

namespace {

Monomial random_monomial(const ChowRing& ring, int degree, std::mt19937_64& rng, bool chain) {
  if (degree == 0) return Monomial();
  if (chain) {
    const auto& list = ring.monomials(degree);
    return list[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(list.size()) - 1))];
  }
  Monomial m;
  const auto n = static_cast<std::int64_t>(ring.variables().size());
  for (int i = 0; i < degree; ++i) {
    m = m * Monomial::variable(static_cast<std::size_t>(uniform_int(rng, 0, n - 1)));
  }
  return m;
}

// Re-index a monomial of a sub-interval ring in the variables of `outer`.
Monomial embed(const Monomial& m, const ChowRing& inner, const ChowRing& outer) {
  Monomial out;
  const auto& vars = outer.variables();
  for (const auto& [v, e] : m.factors()) {
    const auto pos = std::find(vars.begin(), vars.end(), inner.variables()[v]) - vars.begin();
    out = out * Monomial::variable(static_cast<std::size_t>(pos), e);
  }
  return out;
}

}  // namespace

Check tensor_degree_check(const GradedSubposet& poset, Subset k, Subset f, Subset l, int samples,
                          std::uint64_t seed, ChowLimits limits) {
  const auto ki = poset.require(k);
  const auto fi = poset.require(f);
  const auto li = poset.require(l);
  if (!poset.less(ki, fi) || !poset.less(fi, li)) {
    throw Error(ErrorCode::BadNesting, "need K < F < L");
  }
  const ChowRing below = ChowRing::build(poset, k, f, limits);
  const ChowRing above = ChowRing::build(poset, f, l, limits);
  const ChowRing whole = ChowRing::build(poset, k, l, limits);
  const auto fv = static_cast<std::size_t>(
      std::find(whole.variables().begin(), whole.variables().end(), f) -
      whole.variables().begin());
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const bool chain = s % 2 == 0;
    const Monomial xi = random_monomial(below, below.top_degree(), rng, chain);
    const Monomial eta = random_monomial(above, above.top_degree(), rng, chain);
    const Monomial product =
        embed(xi, below, whole) * Monomial::variable(fv) * embed(eta, above, whole);
    const Rational lhs = whole.degree(product);
    const Rational rhs = below.degree(xi) * above.degree(eta);
    if (lhs != rhs) {
      return Check::fail("sample " + std::to_string(s) + ": deg of product " + to_string(lhs) +
                         " but product of degrees " + to_string(rhs));
    }
  }
  return Check::pass();
}

}  // namespace lorflats
